#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "revmap/matrix.hpp"
#include "revmap/subspace.hpp"

namespace revmap {

bool is_involution(const Matrix& m);

/// Ordered pair of linear involutions (phi1, phi2); F = phi1 * phi2.
class InvolutionPair {
public:
    /// Throws precondition_error unless both matrices are square of one size
    /// and square to the identity.
    InvolutionPair(Matrix phi1, Matrix phi2);

    const Matrix& phi1() const { return phi1_; }
    const Matrix& phi2() const { return phi2_; }
    std::size_t dim() const { return phi1_.rows(); }

    /// Fix(phi1) + Fix(phi2) is the whole space.
    bool transversal() const { return transversal_; }

    /// The pair (h phi1 h^-1, h phi2 h^-1).
    InvolutionPair conjugated_by(const Matrix& h) const;

    friend bool operator==(const InvolutionPair& x, const InvolutionPair& y) {
        return x.phi1_ == y.phi1_ && x.phi2_ == y.phi2_;
    }

private:
    Matrix phi1_;
    Matrix phi2_;
    bool transversal_ = false;
};

/// The pair extended by `extra` identity coordinates.
InvolutionPair suspend(const InvolutionPair& pair, std::size_t extra);

Matrix compose_f(const InvolutionPair& pair);

/// F s = s F^-1. Throws singular_matrix_error for singular f.
bool is_reversible(const Matrix& f, const Matrix& s);
/// F s = s F. Throws singular_matrix_error for singular f.
bool is_symmetry(const Matrix& f, const Matrix& s);

enum class Family { unprimed, primed };

/// Names one reversor: phi_k or phi'_k. phi'_1 and phi_1 are the same map
/// and compare equal.
struct ReversorLabel {
    Family family = Family::unprimed;
    int k = 1;

    ReversorLabel canonical() const { return k == 1 ? ReversorLabel{Family::unprimed, 1} : *this; }
    friend bool operator==(const ReversorLabel& x, const ReversorLabel& y) {
        const ReversorLabel a = x.canonical();
        const ReversorLabel b = y.canonical();
        return a.family == b.family && a.k == b.k;
    }
    /// "phi_3", "phi'_4"
    std::string to_string() const;
    /// Label whose fixed subspace is F(Fix(this)).
    ReversorLabel chain_successor() const;
};

/// phi_k = phi2 F^(k-2) or phi'_k = F^(k-1) phi1. Throws precondition_error for k < 1.
Matrix reversor(const InvolutionPair& pair, int k, Family family);

/// Reversors of one family for k = 1..k_max, built by accumulating powers of
/// F one multiplication at a time. Entry i holds k = i + 1.
std::vector<Matrix> reversor_sequence(const InvolutionPair& pair, int k_max, Family family);

Subspace fixed_subspace(const Matrix& m);
Subspace antipodal_subspace(const Matrix& m);

struct ChainLink {
    ReversorLabel source;
    ReversorLabel target;
    std::string relation;  // "unprimed_step", "primed_step", "bridge_odd", "bridge_even"
    bool holds = false;
};

struct ChainReport {
    int k_max = 0;
    std::vector<ChainLink> links;
    std::vector<ChainLink> counterexamples;
    int distinct_fix_count_even = 0;
    int distinct_fix_count_odd = 0;
    /// Some two distinct positions of one chain carry the same fixed subspace.
    /// False means "no repetition up to k_max", not a proof of infinitude.
    bool finite_chain = false;
    std::vector<std::pair<ReversorLabel, ReversorLabel>> coincidences;
    /// dim Fix(phi_k), dim Fix(phi'_k) for k = 1..k_max.
    std::vector<std::size_t> fix_dims_unprimed;
    std::vector<std::size_t> fix_dims_primed;

    bool all_links_hold() const { return counterexamples.empty(); }
};

/// Checks F(Fix phi_{k+2}) = Fix phi_k and F(Fix phi'_k) = Fix phi'_{k+2} for
/// k <= k_max plus the two bridge links. Requires k_max >= 3.
ChainReport verify_chain(const InvolutionPair& pair, int k_max);

/// Least m in [1, m_max] with f^m = I.
std::optional<int> order_of(const Matrix& f, int m_max);

}  // namespace revmap

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "revmap/matrix.hpp"

namespace revmap {

/// Linear subspace of the ambient space, held by its reduced row-echelon
/// basis. Two Subspace values describe the same space iff they compare equal.
class Subspace {
public:
    Subspace() = default;

    /// Span of arbitrary (possibly dependent) vectors of length `ambient_dim`.
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
    static Subspace zero(std::size_t ambient_dim) { return span(ambient_dim, {}); }
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return basis_.size() == ambient_dim_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& x, const Subspace& y) = default;

    std::string to_string() const;

private:
    std::size_t ambient_dim_ = 0;
    std::vector<Vector> basis_;
};

/// {x : m x = 0}; dim = cols - rank.
Subspace kernel(const Matrix& m);
/// Canonical basis of u cap v (Zassenhaus elimination).
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
Subspace subspace_sum(const Subspace& u, const Subspace& v);
bool subspace_equal(const Subspace& u, const Subspace& v);
/// Image m(u); m must be square and invertible.
Subspace apply(const Matrix& m, const Subspace& u);
/// Matrix whose rows are the canonical basis vectors.
Matrix basis_matrix(const Subspace& u);
/// Extends the basis of `u` by standard basis vectors to a basis of the
/// ambient space; returns only the added vectors.
std::vector<Vector> complement_basis(const Subspace& u);

}  // namespace revmap

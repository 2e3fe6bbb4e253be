#include <random>

#include "revmap/classify.hpp"
#include "revmap/errors.hpp"

namespace revmap {

namespace {

// Rows of (s^T (x) I - I (x) t) act on vec(h) and express vec(h s - t h).
Matrix intertwiner_operator(const Matrix& s, const Matrix& t) {
    const std::size_t n = s.rows();
    const Matrix id = Matrix::identity(n);
    return kron(s.transpose(), id) - kron(id, t);
}

Matrix stack_rows(const Matrix& top, const Matrix& bottom) {
    Matrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r) {
        for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
    }
    for (std::size_t r = 0; r < bottom.rows(); ++r) {
        for (std::size_t c = 0; c < bottom.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
    }
    return out;
}

// Similarity invariants that any conjugacy must preserve.
bool invariants_agree(const InvolutionPair& a, const InvolutionPair& b) {
    const Matrix fa = a.phi1() * a.phi2();
    const Matrix fb = b.phi1() * b.phi2();
    const Matrix id = Matrix::identity(a.dim());
    return a.phi1().trace() == b.phi1().trace() && a.phi2().trace() == b.phi2().trace() &&
           fa.trace() == fb.trace() && kernel(fa - id).dim() == kernel(fb - id).dim() &&
           kernel(fa + id).dim() == kernel(fb + id).dim();
}

}  // namespace

ConjugacySolution solve_conjugacy(const InvolutionPair& source, const InvolutionPair& target,
                                  const ConjugacySearch& search) {
    if (source.dim() != target.dim()) throw dimension_error("find_conjugacy: pair dimensions differ");
    const std::size_t n = source.dim();
    ConjugacySolution out;
    if (!invariants_agree(source, target)) return out;
    const Subspace solutions = kernel(stack_rows(intertwiner_operator(source.phi1(), target.phi1()),
                                                 intertwiner_operator(source.phi2(), target.phi2())));
    out.solution_space_dim = solutions.dim();
    if (solutions.is_zero()) return out;

    std::vector<Matrix> basis;
    basis.reserve(solutions.dim());
    for (const Vector& v : solutions.basis()) basis.push_back(unvec(v, n, n));

    for (const Matrix& b : basis) {
        if (b.is_invertible()) {
            out.h = b;
            return out;
        }
    }
    Matrix total = Matrix::zero(n, n);
    for (const Matrix& b : basis) total += b;
    if (total.is_invertible()) {
        out.h = total;
        return out;
    }

    // det is a nonzero polynomial on the span whenever an invertible element
    // exists, so a generic small integer combination is invertible.
    std::mt19937_64 rng(0x5eedULL + n);
    for (long range = search.initial_range; range <= search.max_range; range *= 2) {
        std::uniform_int_distribution<long> coeff(-range, range);
        for (int attempt = 0; attempt < search.tries_per_range; ++attempt) {
            Matrix candidate = Matrix::zero(n, n);
            for (const Matrix& b : basis) {
                const long c = coeff(rng);
                if (c != 0) candidate += b * Scalar(c);
            }
            if (candidate.is_invertible()) {
                out.h = candidate;
                return out;
            }
        }
    }
    out.search_exhausted = true;
    return out;
}

std::optional<Matrix> find_conjugacy(const InvolutionPair& source, const InvolutionPair& target) {
    return solve_conjugacy(source, target).h;
}

std::optional<SuspensionSplit> suspension_split(const InvolutionPair& pair) {
    const std::size_t n = pair.dim();
    if (n < 3) throw precondition_error("suspension_split: dimension must be >= 3");

    const Subspace common_fix = subspace_intersect(fixed_subspace(pair.phi1()), fixed_subspace(pair.phi2()));
    const Subspace moved = subspace_sum(antipodal_subspace(pair.phi1()), antipodal_subspace(pair.phi2()));
    const Subspace overlap = subspace_intersect(moved, common_fix);

    // Trivial block: a complement of `overlap` inside the common fixed space.
    std::vector<Vector> trivial;
    std::vector<Vector> grown = overlap.basis();
    for (const Vector& v : common_fix.basis()) {
        grown.push_back(v);
        if (Subspace::span(n, grown).dim() == grown.size()) {
            trivial.push_back(v);
        } else {
            grown.pop_back();
        }
    }
    if (trivial.empty()) return std::nullopt;

    // Core block: the moved space, topped up by standard vectors to a complement.
    std::vector<Vector> core = moved.basis();
    std::vector<Vector> together = core;
    together.insert(together.end(), trivial.begin(), trivial.end());
    for (const Vector& e : complement_basis(Subspace::span(n, together))) core.push_back(e);

    std::vector<Vector> columns = core;
    columns.insert(columns.end(), trivial.begin(), trivial.end());
    const Matrix basis = Matrix::from_columns(columns, n);
    const Matrix basis_inv = basis.inverse();
    const std::size_t m = core.size();
    const Matrix a1 = basis_inv * pair.phi1() * basis;
    const Matrix a2 = basis_inv * pair.phi2() * basis;
    const Matrix expected_tail = Matrix::identity(trivial.size());
    for (const Matrix* a : {&a1, &a2}) {
        if (!a->block(0, m, m, n - m).is_zero() || !a->block(m, 0, n - m, m).is_zero() ||
            !(a->block(m, m, n - m, n - m) == expected_tail)) {
            throw std::logic_error("suspension_split: block decomposition failed");
        }
    }
    return SuspensionSplit{InvolutionPair(a1.block(0, 0, m, m), a2.block(0, 0, m, m)), trivial.size(), basis};
}

}  // namespace revmap

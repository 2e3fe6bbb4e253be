#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "revmap/matrix.hpp"
#include "revmap/subspace.hpp"

namespace revmap {

/// Linear space of n x n matrices. Matrices are flattened by column stacking
/// (vec), and the basis is the canonical echelon basis of the flattened space.
struct MatrixSpace {
    std::size_t n = 0;
    Subspace flattened;

    std::size_t ambient_dim() const { return n * n; }
    std::size_t dim() const { return flattened.dim(); }
    std::vector<Matrix> basis() const;
    bool contains(const Matrix& s) const;
    /// Span of the given matrices as a MatrixSpace.
    static MatrixSpace span(std::size_t n, const std::vector<Matrix>& matrices);

    friend bool operator==(const MatrixSpace& x, const MatrixSpace& y) = default;
};

/// {S : f S = S f}. Throws singular_matrix_error for singular f.
MatrixSpace symmetry_space(const Matrix& f);
/// {S : f S = S f^-1}. Throws singular_matrix_error for singular f.
MatrixSpace reversing_space(const Matrix& f);

enum class Membership { symmetry, reversing, both, neither };

std::string to_string(Membership m);

/// Requires s and f invertible.
Membership membership(const Matrix& s, const Matrix& f);

/// delta * symmetry_space(f) = reversing_space(f) and
/// delta^-1 * reversing_space(f) = symmetry_space(f).
/// Throws precondition_error unless delta is an invertible reversor of f.
bool coset_check(const Matrix& f, const Matrix& delta);

}  // namespace revmap

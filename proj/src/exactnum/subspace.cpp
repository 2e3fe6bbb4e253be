#include "revmap/subspace.hpp"

#include "revmap/errors.hpp"

namespace revmap {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v, const char* what) {
    if (u.ambient_dim() != v.ambient_dim()) {
        throw dimension_error(std::string(what) + ": ambient dimensions " + std::to_string(u.ambient_dim()) +
                              " and " + std::to_string(v.ambient_dim()) + " differ");
    }
}

}  // namespace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    Subspace out;
    out.ambient_dim_ = ambient_dim;
    if (vectors.empty()) return out;
    const RrefResult red = rref(Matrix::from_rows(vectors, ambient_dim));
    out.basis_.reserve(red.rank);
    for (std::size_t r = 0; r < red.rank; ++r) out.basis_.push_back(red.reduced.row(r));
    return out;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    const Matrix id = Matrix::identity(ambient_dim);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < ambient_dim; ++i) rows.push_back(id.row(i));
    return span(ambient_dim, rows);
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_dim_) throw dimension_error("Subspace::contains: vector length mismatch");
    std::vector<Vector> rows = basis_;
    rows.push_back(v);
    return span(ambient_dim_, rows).dim() == dim();
}

bool Subspace::contains(const Subspace& other) const {
    require_same_ambient(*this, other, "Subspace::contains");
    return subspace_sum(*this, other).dim() == dim();
}

std::string Subspace::to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i > 0) out += ", ";
        out += revmap::to_string(basis_[i]);
    }
    return out + ">";
}

Subspace kernel(const Matrix& m) {
    const RrefResult red = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : red.pivot_columns) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v(n);
        v[free] = 1;
        for (std::size_t r = 0; r < red.rank; ++r) v[red.pivot_columns[r]] = -red.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return Subspace::span(n, basis);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v, "subspace_intersect");
    const std::size_t n = u.ambient_dim();
    if (u.is_zero() || v.is_zero()) return Subspace::zero(n);
    // Zassenhaus: rows (u_i | u_i) and (v_j | 0); rows of the echelon form whose
    // left half vanishes carry a basis of the intersection in their right half.
    Matrix stacked(u.dim() + v.dim(), 2 * n);
    for (std::size_t i = 0; i < u.dim(); ++i) {
        for (std::size_t c = 0; c < n; ++c) {
            stacked(i, c) = u.basis()[i][c];
            stacked(i, n + c) = u.basis()[i][c];
        }
    }
    for (std::size_t j = 0; j < v.dim(); ++j) {
        for (std::size_t c = 0; c < n; ++c) stacked(u.dim() + j, c) = v.basis()[j][c];
    }
    const RrefResult red = rref(stacked);
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < red.rank; ++r) {
        if (red.pivot_columns[r] < n) continue;
        Vector w(n);
        for (std::size_t c = 0; c < n; ++c) w[c] = red.reduced(r, n + c);
        rows.push_back(std::move(w));
    }
    return Subspace::span(n, rows);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v, "subspace_sum");
    std::vector<Vector> rows = u.basis();
    rows.insert(rows.end(), v.basis().begin(), v.basis().end());
    return Subspace::span(u.ambient_dim(), rows);
}

bool subspace_equal(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v, "subspace_equal");
    return u == v;
}

Subspace apply(const Matrix& m, const Subspace& u) {
    if (!m.is_square() || m.cols() != u.ambient_dim()) throw dimension_error("apply: matrix does not act on subspace");
    if (!m.is_invertible()) throw singular_matrix_error("apply: matrix is singular");
    std::vector<Vector> images;
    images.reserve(u.dim());
    for (const Vector& b : u.basis()) images.push_back(m * b);
    return Subspace::span(u.ambient_dim(), images);
}

Matrix basis_matrix(const Subspace& u) {
    return Matrix::from_rows(u.basis(), u.ambient_dim());
}

std::vector<Vector> complement_basis(const Subspace& u) {
    const std::size_t n = u.ambient_dim();
    std::vector<Vector> rows = u.basis();
    std::vector<Vector> added;
    std::size_t rank = u.dim();
    for (std::size_t i = 0; i < n && rank < n; ++i) {
        Vector e(n);
        e[i] = 1;
        rows.push_back(e);
        const std::size_t next = Subspace::span(n, rows).dim();
        if (next > rank) {
            rank = next;
            added.push_back(std::move(e));
        } else {
            rows.pop_back();
        }
    }
    return added;
}

}  // namespace revmap

#include "revmap/symgroups.hpp"

#include "revmap/errors.hpp"

namespace revmap {

namespace {

void require_invertible(const Matrix& m, const char* what) {
    if (!m.is_square()) throw dimension_error(std::string(what) + ": matrix is not square");
    if (!m.is_invertible()) throw singular_matrix_error(std::string(what) + ": matrix is singular");
}

// vec(a S - S b) = (I (x) a - b^T (x) I) vec(S).
MatrixSpace solve_intertwining(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.rows();
    const Matrix id = Matrix::identity(n);
    return MatrixSpace{n, kernel(kron(id, a) - kron(b.transpose(), id))};
}

}  // namespace

std::vector<Matrix> MatrixSpace::basis() const {
    std::vector<Matrix> out;
    for (const Vector& v : flattened.basis()) out.push_back(unvec(v, n, n));
    return out;
}

bool MatrixSpace::contains(const Matrix& s) const {
    if (s.rows() != n || s.cols() != n) throw dimension_error("MatrixSpace: size mismatch");
    return flattened.contains(vec(s));
}

MatrixSpace MatrixSpace::span(std::size_t n, const std::vector<Matrix>& matrices) {
    std::vector<Vector> flat;
    for (const Matrix& m : matrices) flat.push_back(vec(m));
    return MatrixSpace{n, Subspace::span(n * n, flat)};
}

MatrixSpace symmetry_space(const Matrix& f) {
    require_invertible(f, "symmetry_space");
    return solve_intertwining(f, f);
}

MatrixSpace reversing_space(const Matrix& f) {
    require_invertible(f, "reversing_space");
    return solve_intertwining(f, f.inverse());
}

std::string to_string(Membership m) {
    switch (m) {
        case Membership::symmetry: return "symmetry";
        case Membership::reversing: return "reversing";
        case Membership::both: return "both";
        case Membership::neither: return "neither";
    }
    return "unknown";
}

Membership membership(const Matrix& s, const Matrix& f) {
    require_invertible(f, "membership");
    require_invertible(s, "membership");
    if (s.rows() != f.rows()) throw dimension_error("membership: size mismatch");
    const bool sym = f * s == s * f;
    const bool rev = f * s == s * f.inverse();
    if (sym && rev) return Membership::both;
    if (sym) return Membership::symmetry;
    if (rev) return Membership::reversing;
    return Membership::neither;
}

bool coset_check(const Matrix& f, const Matrix& delta) {
    require_invertible(f, "coset_check");
    require_invertible(delta, "coset_check");
    if (delta.rows() != f.rows()) throw dimension_error("coset_check: size mismatch");
    if (!(f * delta == delta * f.inverse())) throw precondition_error("coset_check: delta does not reverse f");
    const std::size_t n = f.rows();
    const MatrixSpace sym = symmetry_space(f);
    const MatrixSpace rev = reversing_space(f);
    const Matrix delta_inv = delta.inverse();
    std::vector<Matrix> forward;
    for (const Matrix& b : sym.basis()) forward.push_back(delta * b);
    std::vector<Matrix> backward;
    for (const Matrix& b : rev.basis()) backward.push_back(delta_inv * b);
    return sym.dim() == rev.dim() && MatrixSpace::span(n, forward) == rev && MatrixSpace::span(n, backward) == sym;
}

}  // namespace revmap

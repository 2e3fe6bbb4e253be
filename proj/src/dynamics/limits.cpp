#include "revmap/dynamics.hpp"

#include "revmap/errors.hpp"

namespace revmap {

namespace {

Vector canonical_direction(const std::vector<Vector>& vectors) {
    const Subspace line = Subspace::span(2, vectors);
    if (line.dim() != 1) throw precondition_error("quotient plane: expected a line, got dim " + std::to_string(line.dim()));
    return line.basis().front();
}

// Strictly decreasing |x| over the defined entries of one parity class;
// classes that sit on the limit (all zero) are skipped.
bool decreasing_by_parity(const std::vector<std::optional<Scalar>>& deviations) {
    for (std::size_t parity = 0; parity < 2; ++parity) {
        std::vector<Scalar> seq;
        for (std::size_t i = parity; i < deviations.size(); i += 2) {
            if (deviations[i]) seq.push_back(deviations[i]->abs());
        }
        bool stationary = true;
        for (const Scalar& x : seq) stationary = stationary && x.is_zero();
        if (stationary) continue;
        for (std::size_t i = 1; i < seq.size(); ++i) {
            if (!(seq[i] < seq[i - 1])) return false;
        }
    }
    return true;
}

}  // namespace

Vector QuotientPlane::trace_of(const Subspace& s) const {
    std::vector<Vector> projected;
    for (const Vector& v : s.basis()) {
        const Vector coords = frame_inverse * v;
        projected.push_back(Vector{coords[0], coords[1]});
    }
    return canonical_direction(projected);
}

Matrix QuotientPlane::induced(const Matrix& m) const {
    const Matrix in_frame = frame_inverse * m * frame;
    const std::size_t n = frame.rows();
    if (n > 2 && !in_frame.block(0, 2, 2, n - 2).is_zero()) {
        throw precondition_error("quotient plane: map does not preserve the common fixed space");
    }
    return in_frame.block(0, 0, 2, 2);
}

Subspace QuotientPlane::lift(const Vector& direction) const {
    Vector padded(frame.rows());
    padded[0] = direction[0];
    padded[1] = direction[1];
    std::vector<Vector> vectors = common_fix.basis();
    vectors.push_back(frame * padded);
    return Subspace::span(frame.rows(), vectors);
}

QuotientPlane quotient_plane(const InvolutionPair& pair) {
    const std::size_t n = pair.dim();
    const Subspace fix1 = fixed_subspace(pair.phi1());
    const Subspace fix2 = fixed_subspace(pair.phi2());
    if (fix1.dim() + 1 != n || fix2.dim() + 1 != n || fix1 == fix2) {
        throw precondition_error("quotient_plane: fixed subspaces must be distinct hyperplanes");
    }
    QuotientPlane qp;
    qp.common_fix = subspace_intersect(fix1, fix2);
    qp.plane_basis = complement_basis(qp.common_fix);
    std::vector<Vector> columns = qp.plane_basis;
    columns.insert(columns.end(), qp.common_fix.basis().begin(), qp.common_fix.basis().end());
    qp.frame = Matrix::from_columns(columns, n);
    qp.frame_inverse = qp.frame.inverse();
    return qp;
}

LimitReport limit_directions(const InvolutionPair& pair, int k_max) {
    if (k_max < 2) throw precondition_error("limit_directions: k_max must be >= 2");
    const QuotientPlane qp = quotient_plane(pair);
    const Matrix f_bar = qp.induced(compose_f(pair));
    const Matrix id = Matrix::identity(2);
    if (f_bar == id || f_bar == -id) throw precondition_error("limit_directions: abelian pair, nothing accumulates");
    const Scalar t = f_bar.trace();
    const Scalar two(2);

    LimitReport report;
    Vector toward_primed;  // limit of the primed family
    Vector toward_unprimed;
    Vector complement_primed;
    Vector complement_unprimed;
    if (t.abs() == two) {
        report.kind = "parabolic";
        const Vector line = canonical_direction(kernel(f_bar - id * (t / two)).basis());
        const Vector other = line[0].is_zero() ? Vector{Scalar(1), Scalar(0)} : Vector{Scalar(0), Scalar(1)};
        toward_primed = toward_unprimed = line;
        complement_primed = complement_unprimed = other;
    } else if (t.abs() > two) {
        if (!t.is_rational()) throw precondition_error("limit_directions: hyperbolic trace must be rational");
        report.kind = "hyperbolic";
        const Rational tq = t.rational_part();
        const Scalar root = sqrt_rational(tq * tq - 4);
        const Scalar lambda_plus = (t + root) / two;
        const Scalar lambda_minus = (t - root) / two;
        const Vector v_plus = canonical_direction(kernel(f_bar - id * lambda_plus).basis());
        const Vector v_minus = canonical_direction(kernel(f_bar - id * lambda_minus).basis());
        const bool plus_expands = lambda_plus.abs() > Scalar(1);
        const Vector& expanding = plus_expands ? v_plus : v_minus;
        const Vector& contracting = plus_expands ? v_minus : v_plus;
        toward_primed = expanding;
        complement_primed = contracting;
        toward_unprimed = contracting;
        complement_unprimed = expanding;
    } else {
        throw precondition_error("limit_directions: |t| < 2, fixed lines are dense and do not accumulate");
    }

    for (Family family : {Family::unprimed, Family::primed}) {
        FamilyLimit out;
        out.family = family;
        out.limit_direction = family == Family::primed ? toward_primed : toward_unprimed;
        out.complement_direction = family == Family::primed ? complement_primed : complement_unprimed;
        out.limit = qp.lift(out.limit_direction);
        const Matrix coords =
            Matrix::from_columns({out.limit_direction, out.complement_direction}, 2).inverse();
        for (const Matrix& phi : reversor_sequence(pair, k_max, family)) {
            const Vector ab = coords * qp.trace_of(fixed_subspace(phi));
            out.deviations.push_back(ab[0].is_zero() ? std::nullopt : std::optional<Scalar>(ab[1] / ab[0]));
        }
        out.monotone = decreasing_by_parity(out.deviations);
        report.families.push_back(std::move(out));
    }
    return report;
}

}  // namespace revmap

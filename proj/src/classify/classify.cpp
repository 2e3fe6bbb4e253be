#include "revmap/classify.hpp"

#include "revmap/errors.hpp"

namespace revmap {

namespace {

bool commute(const Matrix& a, const Matrix& b) {
    return a * b == b * a;
}

Matrix witness_or_throw(const InvolutionPair& pair, const InvolutionPair& normal_form) {
    const ConjugacySolution sol = solve_conjugacy(pair, normal_form);
    if (!sol.h) {
        throw std::logic_error("classify: no conjugacy to the normal form found (solution space dim " +
                               std::to_string(sol.solution_space_dim) + ")");
    }
    return *sol.h;
}

}  // namespace

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::planar_abelian: return "planar_abelian";
        case CaseTag::planar_nonabelian_contained: return "planar_nonabelian_contained";
        case CaseTag::planar_nonabelian_generic: return "planar_nonabelian_generic";
        case CaseTag::gen_a: return "gen_a";
        case CaseTag::gen_b: return "gen_b";
        case CaseTag::gen_c: return "gen_c";
        case CaseTag::gen_d: return "gen_d";
        case CaseTag::gen_e: return "gen_e";
    }
    return "unknown";
}

Matrix EigenFrame::beta_matrix() const {
    if (!beta_basis) throw precondition_error("EigenFrame: no real eigenbasis for this trace");
    return Matrix::from_columns({(*beta_basis)[0], (*beta_basis)[1]}, 2);
}

EigenFrame eigen_frame(const Scalar& t) {
    EigenFrame frame;
    frame.theta_cos = t / Scalar(2);
    const Scalar two(2);
    if (t.abs() == two) {
        frame.lambda_plus = frame.theta_cos;
        frame.lambda_minus = frame.theta_cos;
        return frame;
    }
    if (!t.is_rational()) return frame;
    const Rational tq = t.rational_part();
    if (t.abs() > two) {
        const Scalar root = sqrt_rational(tq * tq - 4);
        const Scalar lp = (t + root) / two;
        const Scalar lm = (t - root) / two;
        frame.lambda_plus = lp;
        frame.lambda_minus = lm;
        frame.beta_basis = std::array<Vector, 2>{Vector{Scalar(1), Scalar(-1) - lp}, Vector{Scalar(1), Scalar(-1) - lm}};
    } else {
        const Scalar root = sqrt_rational(4 - tq * tq);
        frame.beta_basis = std::array<Vector, 2>{Vector{Scalar(1), -t / two - Scalar(1)}, Vector{Scalar(0), -root / two}};
    }
    return frame;
}

InvolutionPair planar_abelian_form() {
    return InvolutionPair(Matrix{{-1, 0}, {0, 1}}, Matrix{{1, 0}, {0, -1}});
}

InvolutionPair planar_contained_form() {
    return InvolutionPair(Matrix{{-1, 0}, {1, 1}}, Matrix{{1, 0}, {0, -1}});
}

InvolutionPair planar_generic_form(const Scalar& t) {
    return InvolutionPair(Matrix{{-1, 0}, {Scalar(2) + t, 1}}, Matrix{{1, 1}, {0, -1}});
}

InvolutionPair triple_block_form(std::size_t n) {
    if (n < 3) throw precondition_error("triple_block_form: dimension must be >= 3");
    Matrix phi1 = Matrix::identity(n);
    phi1(0, 0) = -1;
    phi1(1, 0) = 4;
    Matrix phi2 = Matrix::identity(n);
    phi2(0, 1) = 1;
    phi2(1, 1) = -1;
    phi2(2, 1) = 1;
    return InvolutionPair(std::move(phi1), std::move(phi2));
}

ClassificationResult classify_planar(const InvolutionPair& pair) {
    if (pair.dim() != 2) throw precondition_error("classify_planar: dimension must be 2");
    const Matrix id = Matrix::identity(2);
    for (const Matrix* m : {&pair.phi1(), &pair.phi2()}) {
        if (*m == id || *m == -id) throw precondition_error("classify_planar: +-I is outside the normal-form table");
    }
    if (!pair.transversal()) throw precondition_error("classify_planar: pair is not transversal");

    const Scalar t = compose_f(pair).trace();
    CaseTag tag;
    InvolutionPair normal_form = planar_abelian_form();
    if (commute(pair.phi1(), pair.phi2())) {
        tag = CaseTag::planar_abelian;
    } else if (antipodal_subspace(pair.phi2()) == fixed_subspace(pair.phi1())) {
        tag = CaseTag::planar_nonabelian_contained;
        normal_form = planar_contained_form();
    } else {
        tag = CaseTag::planar_nonabelian_generic;
        normal_form = planar_generic_form(t);
    }
    Matrix h = witness_or_throw(pair, normal_form);
    ClassificationResult result{tag, t, normal_form, std::move(h), std::nullopt, std::nullopt};
    if (tag == CaseTag::planar_nonabelian_generic) result.eigen = eigen_frame(t);
    return result;
}

ClassificationResult classify_general(const InvolutionPair& pair) {
    const std::size_t n = pair.dim();
    if (n < 3) throw precondition_error("classify_general: dimension must be >= 3");
    const Subspace fix1 = fixed_subspace(pair.phi1());
    const Subspace fix2 = fixed_subspace(pair.phi2());
    if (fix1.dim() != n - 1 || fix2.dim() != n - 1) {
        throw precondition_error("classify_general: fixed subspaces must be hyperplanes (dims " +
                                 std::to_string(fix1.dim()) + ", " + std::to_string(fix2.dim()) + ")");
    }
    if (!pair.transversal()) throw precondition_error("classify_general: pair is not transversal");

    const Scalar trace_f = compose_f(pair).trace();
    const Scalar n_scalar(static_cast<long>(n));
    const Subspace anti1 = antipodal_subspace(pair.phi1());
    const Subspace anti2 = antipodal_subspace(pair.phi2());
    const std::size_t extra = n - 2;

    CaseTag tag;
    InvolutionPair normal_form = suspend(planar_abelian_form(), extra);
    if (commute(pair.phi1(), pair.phi2())) {
        tag = CaseTag::gen_a;
    } else if (!(trace_f == n_scalar)) {
        if (fix1.contains(anti2)) {
            tag = CaseTag::gen_b;
            normal_form = suspend(planar_contained_form(), extra);
        } else {
            tag = CaseTag::gen_c;
            normal_form = suspend(planar_generic_form(trace_f - Scalar(static_cast<long>(extra))), extra);
        }
    } else if (anti1 == anti2) {
        tag = CaseTag::gen_d;
        normal_form = suspend(planar_generic_form(Scalar(2)), extra);
    } else {
        tag = CaseTag::gen_e;
        normal_form = triple_block_form(n);
    }
    Matrix h = witness_or_throw(pair, normal_form);
    ClassificationResult result{tag, trace_f, normal_form, std::move(h), std::nullopt, std::nullopt};
    if (auto split = suspension_split(pair)) {
        result.suspension_split = SuspensionDims{n - split->trivial_dim, split->trivial_dim};
    }
    return result;
}

ClassificationResult classify(const InvolutionPair& pair) {
    return pair.dim() == 2 ? classify_planar(pair) : classify_general(pair);
}

}  // namespace revmap

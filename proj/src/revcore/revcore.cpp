#include "revmap/revcore.hpp"

#include "revmap/errors.hpp"

namespace revmap {

namespace {

void require_invertible(const Matrix& f, const char* what) {
    if (!f.is_square()) throw dimension_error(std::string(what) + ": matrix is not square");
    if (!f.is_invertible()) throw singular_matrix_error(std::string(what) + ": matrix is singular");
}

// Scans f^m for m <= m_max with integer arithmetic: f = g / den with g integral,
// so f^m = I iff g^m = den^m I.
std::optional<int> rational_order(const Matrix& f, int m_max) {
    const std::size_t n = f.rows();
    mpz_class den = 1;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), f(r, c).rational_part().get_den_mpz_t());
        }
    }
    std::vector<mpz_class> g(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const Rational& q = f(r, c).rational_part();
            g[r * n + c] = q.get_num() * (den / q.get_den());
        }
    }
    std::vector<mpz_class> power = g;
    std::vector<mpz_class> next(n * n);
    mpz_class scale = den;
    for (int m = 1; m <= m_max; ++m) {
        bool identity = true;
        for (std::size_t r = 0; r < n && identity; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (power[r * n + c] != (r == c ? scale : mpz_class(0))) {
                    identity = false;
                    break;
                }
            }
        }
        if (identity) return m;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                mpz_class acc = 0;
                for (std::size_t k = 0; k < n; ++k) acc += power[r * n + k] * g[k * n + c];
                next[r * n + c] = std::move(acc);
            }
        }
        std::swap(power, next);
        scale *= den;
    }
    return std::nullopt;
}

}  // namespace

bool is_involution(const Matrix& m) {
    if (!m.is_square()) throw dimension_error("is_involution: matrix is not square");
    return (m * m).is_identity();
}

InvolutionPair::InvolutionPair(Matrix phi1, Matrix phi2) : phi1_(std::move(phi1)), phi2_(std::move(phi2)) {
    if (!phi1_.is_square() || !phi2_.is_square() || phi1_.rows() != phi2_.rows()) {
        throw precondition_error("InvolutionPair: matrices must be square of equal size");
    }
    if (phi1_.rows() == 0) throw precondition_error("InvolutionPair: empty matrices");
    if (!is_involution(phi1_)) throw precondition_error("InvolutionPair: phi1 is not an involution");
    if (!is_involution(phi2_)) throw precondition_error("InvolutionPair: phi2 is not an involution");
    transversal_ = subspace_sum(fixed_subspace(phi1_), fixed_subspace(phi2_)).is_full();
}

InvolutionPair InvolutionPair::conjugated_by(const Matrix& h) const {
    const Matrix h_inv = h.inverse();
    return InvolutionPair(h * phi1_ * h_inv, h * phi2_ * h_inv);
}

InvolutionPair suspend(const InvolutionPair& pair, std::size_t extra) {
    const Matrix id = Matrix::identity(extra);
    return InvolutionPair(direct_sum(pair.phi1(), id), direct_sum(pair.phi2(), id));
}

Matrix compose_f(const InvolutionPair& pair) {
    return pair.phi1() * pair.phi2();
}

bool is_reversible(const Matrix& f, const Matrix& s) {
    require_invertible(f, "is_reversible");
    return f * s == s * f.inverse();
}

bool is_symmetry(const Matrix& f, const Matrix& s) {
    require_invertible(f, "is_symmetry");
    return f * s == s * f;
}

std::string ReversorLabel::to_string() const {
    const ReversorLabel c = canonical();
    return std::string(c.family == Family::primed ? "phi'_" : "phi_") + std::to_string(c.k);
}

ReversorLabel ReversorLabel::chain_successor() const {
    const ReversorLabel c = canonical();
    if (c.family == Family::primed) return {Family::primed, c.k + 2};
    if (c.k == 1) return {Family::primed, 3};
    if (c.k == 2) return {Family::primed, 2};
    return {Family::unprimed, c.k - 2};
}

Matrix reversor(const InvolutionPair& pair, int k, Family family) {
    if (k < 1) throw precondition_error("reversor: index k must be >= 1");
    return reversor_sequence(pair, k, family).back();
}

std::vector<Matrix> reversor_sequence(const InvolutionPair& pair, int k_max, Family family) {
    if (k_max < 1) throw precondition_error("reversor_sequence: k_max must be >= 1");
    const Matrix f = compose_f(pair);
    std::vector<Matrix> out;
    out.reserve(static_cast<std::size_t>(k_max));
    if (family == Family::unprimed) {
        // phi_1 = phi2 F^-1, phi_2 = phi2, phi_{k+1} = phi_k F
        out.push_back(pair.phi2() * f.inverse());
        if (k_max >= 2) out.push_back(pair.phi2());
        for (int k = 3; k <= k_max; ++k) out.push_back(out.back() * f);
    } else {
        // phi'_1 = phi1, phi'_{k+1} = F phi'_k
        out.push_back(pair.phi1());
        for (int k = 2; k <= k_max; ++k) out.push_back(f * out.back());
    }
    return out;
}

Subspace fixed_subspace(const Matrix& m) {
    if (!m.is_square()) throw dimension_error("fixed_subspace: matrix is not square");
    return kernel(m - Matrix::identity(m.rows()));
}

Subspace antipodal_subspace(const Matrix& m) {
    if (!m.is_square()) throw dimension_error("antipodal_subspace: matrix is not square");
    return kernel(m + Matrix::identity(m.rows()));
}

ChainReport verify_chain(const InvolutionPair& pair, int k_max) {
    if (k_max < 3) throw precondition_error("verify_chain: k_max must be >= 3");
    const Matrix f = compose_f(pair);
    const auto unprimed = reversor_sequence(pair, k_max + 2, Family::unprimed);
    const auto primed = reversor_sequence(pair, k_max + 2, Family::primed);
    std::vector<Subspace> fix_u;
    std::vector<Subspace> fix_p;
    for (int i = 0; i < k_max + 2; ++i) {
        fix_u.push_back(fixed_subspace(unprimed[static_cast<std::size_t>(i)]));
        fix_p.push_back(fixed_subspace(primed[static_cast<std::size_t>(i)]));
    }
    auto fix = [&](Family fam, int k) -> const Subspace& {
        return fam == Family::unprimed ? fix_u[static_cast<std::size_t>(k - 1)] : fix_p[static_cast<std::size_t>(k - 1)];
    };

    ChainReport report;
    report.k_max = k_max;
    auto check = [&](ReversorLabel source, ReversorLabel target, const char* relation) {
        ChainLink link{source, target, relation, apply(f, fix(source.family, source.k)) == fix(target.family, target.k)};
        if (!link.holds) report.counterexamples.push_back(link);
        report.links.push_back(std::move(link));
    };
    check({Family::unprimed, 1}, {Family::primed, 3}, "bridge_odd");
    check({Family::unprimed, 2}, {Family::primed, 2}, "bridge_even");
    for (int k = 1; k <= k_max; ++k) {
        check({Family::unprimed, k + 2}, {Family::unprimed, k}, "unprimed_step");
        check({Family::primed, k}, {Family::primed, k + 2}, "primed_step");
    }

    for (int k = 1; k <= k_max; ++k) {
        report.fix_dims_unprimed.push_back(fix(Family::unprimed, k).dim());
        report.fix_dims_primed.push_back(fix(Family::primed, k).dim());
    }

    // Chain positions up to k_max, one list per parity; phi'_1 is phi_1.
    for (int parity = 0; parity < 2; ++parity) {
        std::vector<ReversorLabel> positions;
        for (int k = 1; k <= k_max; ++k) {
            if (k % 2 != parity) continue;
            positions.push_back({Family::unprimed, k});
            if (k != 1) positions.push_back({Family::primed, k});
        }
        std::vector<const Subspace*> distinct;
        for (std::size_t i = 0; i < positions.size(); ++i) {
            const Subspace& si = fix(positions[i].family, positions[i].k);
            bool seen = false;
            for (const Subspace* s : distinct) seen = seen || *s == si;
            if (!seen) distinct.push_back(&si);
            for (std::size_t j = i + 1; j < positions.size(); ++j) {
                if (si == fix(positions[j].family, positions[j].k)) {
                    report.coincidences.emplace_back(positions[i], positions[j]);
                }
            }
        }
        (parity == 0 ? report.distinct_fix_count_even : report.distinct_fix_count_odd) = static_cast<int>(distinct.size());
    }
    report.finite_chain = !report.coincidences.empty();
    return report;
}

std::optional<int> order_of(const Matrix& f, int m_max) {
    require_invertible(f, "order_of");
    bool rational = true;
    for (std::size_t r = 0; r < f.rows(); ++r) {
        for (std::size_t c = 0; c < f.cols(); ++c) rational = rational && f(r, c).is_rational();
    }
    if (rational) return rational_order(f, m_max);
    Matrix power = f;
    for (int m = 1; m <= m_max; ++m) {
        if (power.is_identity()) return m;
        power = power * f;
    }
    return std::nullopt;
}

}  // namespace revmap

#include "revmap/dynamics.hpp"

#include "revmap/errors.hpp"

namespace revmap {

std::vector<Vector> orbit(const Matrix& f, const Vector& x, long steps) {
    if (!f.is_square() || f.cols() != x.size()) throw dimension_error("orbit: point does not match map");
    if (!f.is_invertible()) throw singular_matrix_error("orbit: map is singular");
    const Matrix step = steps < 0 ? f.inverse() : f;
    const long count = steps < 0 ? -steps : steps;
    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    out.push_back(x);
    for (long i = 0; i < count; ++i) out.push_back(step * out.back());
    return out;
}

bool reversed_orbit_check(const Matrix& f, const Matrix& phi, const Vector& x, long steps) {
    if (!is_reversible(f, phi)) throw precondition_error("reversed_orbit_check: phi does not reverse F");
    if (steps < 0) throw precondition_error("reversed_orbit_check: steps must be >= 0");
    const std::vector<Vector> forward = orbit(f, x, steps);
    const std::vector<Vector> backward = orbit(f, phi * x, -steps);
    for (long j = 0; j <= steps; ++j) {
        const auto idx = static_cast<std::size_t>(j);
        if (!(phi * forward[idx] == backward[idx])) return false;
    }
    return true;
}

std::string to_string(CertificateFlavor flavor) {
    switch (flavor) {
        case CertificateFlavor::A: return "A";
        case CertificateFlavor::B: return "B";
        case CertificateFlavor::C: return "C";
    }
    return "?";
}

PeriodicityReport periodic_certificates(const InvolutionPair& pair, int k_max) {
    if (k_max < 2) throw precondition_error("periodic_certificates: k_max must be >= 2");
    const Matrix f = compose_f(pair);
    const auto unprimed = reversor_sequence(pair, k_max, Family::unprimed);
    const auto primed = reversor_sequence(pair, k_max, Family::primed);
    std::vector<Subspace> fix_u;
    std::vector<Subspace> fix_p;
    for (int i = 0; i < k_max; ++i) {
        fix_u.push_back(fixed_subspace(unprimed[static_cast<std::size_t>(i)]));
        fix_p.push_back(fixed_subspace(primed[static_cast<std::size_t>(i)]));
    }
    const int max_divisor = 2 * k_max - 2;
    std::vector<Subspace> fix_power;  // Fix(F^d), d = 0..max_divisor
    {
        Matrix power = Matrix::identity(pair.dim());
        for (int d = 0; d <= max_divisor; ++d) {
            fix_power.push_back(fixed_subspace(power));
            power = power * f;
        }
    }

    PeriodicityReport report;
    auto examine = [&](CertificateFlavor flavor, int k, int l, const Subspace& first, const Subspace& second,
                       int divisor) {
        const Subspace meet = subspace_intersect(first, second);
        // Converse: points of `first` whose period divides `divisor` lie in `second`.
        const Subspace periodic_part = subspace_intersect(first, fix_power[static_cast<std::size_t>(divisor)]);
        if (!second.contains(periodic_part)) {
            throw std::logic_error("periodic_certificates: converse containment fails at (" + to_string(flavor) +
                                   ", " + std::to_string(k) + ", " + std::to_string(l) + ")");
        }
        ++report.converse_checks;
        if (meet.is_zero()) {
            ++report.trivial_intersections;
            return;
        }
        for (const Vector& x : meet.basis()) {
            Vector y = x;
            for (int i = 0; i < divisor; ++i) y = f * y;
            if (!(y == x)) {
                throw std::logic_error("periodic_certificates: iteration check fails at (" + to_string(flavor) + ", " +
                                       std::to_string(k) + ", " + std::to_string(l) + ")");
            }
            report.certificates.push_back(PeriodCertificate{x, k, l, flavor, divisor});
        }
    };

    for (int k = 1; k <= k_max; ++k) {
        for (int l = k + 1; l <= k_max; ++l) {
            examine(CertificateFlavor::A, k, l, fix_u[static_cast<std::size_t>(k - 1)],
                    fix_u[static_cast<std::size_t>(l - 1)], l - k);
        }
    }
    for (int k = 1; k <= k_max; ++k) {
        for (int l = k + 1; l <= k_max; ++l) {
            examine(CertificateFlavor::B, k, l, fix_p[static_cast<std::size_t>(k - 1)],
                    fix_p[static_cast<std::size_t>(l - 1)], l - k);
        }
    }
    for (int k = 1; k <= k_max; ++k) {
        for (int l = 1; l <= k_max; ++l) {
            if (k + l - 2 < 1) continue;
            examine(CertificateFlavor::C, k, l, fix_p[static_cast<std::size_t>(k - 1)],
                    fix_u[static_cast<std::size_t>(l - 1)], k + l - 2);
        }
    }
    return report;
}

Matrix generic_normal_map(const Scalar& t) {
    return Matrix{{-1, -1}, {Scalar(2) + t, Scalar(1) + t}};
}

std::optional<int> rotation_order(const Scalar& t, int q_max) {
    if (!(t.abs() < Scalar(2))) throw precondition_error("rotation_order: requires |t| < 2");
    return order_of(generic_normal_map(t), q_max);
}

}  // namespace revmap

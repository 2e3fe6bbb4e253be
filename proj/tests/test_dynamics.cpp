#include <doctest.h>

#include <random>

#include "revmap/classify.hpp"
#include "revmap/dynamics.hpp"
#include "revmap/errors.hpp"
#include "support/oracle.hpp"

using namespace revmap;

namespace {

Vector v2(Scalar x, Scalar y) {
    return Vector{x, y};
}

bool sector_between(const SectorArrangement& arr, std::size_t id, const Vector& from_dir, const Vector& to_dir) {
    const Sector& s = arr.sectors[id];
    auto same_ray = [](const Vector& a, const Vector& b) {
        return (a[0] * b[1] - a[1] * b[0]).is_zero() && (a[0] * b[0] + a[1] * b[1]).sign() > 0;
    };
    return same_ray(s.from, from_dir) && same_ray(s.to, to_dir);
}

}  // namespace

TEST_CASE("orbit examples") {
    const Matrix f = compose_f(oracle::load_pair("planar_contained"));
    const auto pts = orbit(f, v2(1, 0), 12);
    for (int k = 0; k <= 12; ++k) {
        const Scalar s = k % 2 == 0 ? 1 : -1;
        CHECK(pts[static_cast<std::size_t>(k)] == v2(s, s * Scalar(-k)));
    }
    const auto back = orbit(f, v2(1, 0), -3);
    CHECK(back[3] == v2(-1, -3));
    const auto flip = orbit(-Matrix::identity(2), v2(2, 5), 3);
    CHECK(flip[1] == v2(-2, -5));
    CHECK(flip[2] == v2(2, 5));
    for (const Vector& p : orbit(f, v2(0, 0), 5)) CHECK(is_zero_vector(p));
    CHECK_THROWS_AS(orbit(Matrix::zero(2, 2), v2(1, 0), 2), singular_matrix_error);
}

TEST_CASE("reversed orbit examples") {
    const InvolutionPair c = oracle::load_pair("planar_contained");
    CHECK(reversed_orbit_check(compose_f(c), c.phi1(), v2(1, 0), 10));
    CHECK(reversed_orbit_check(-Matrix::identity(2), Matrix{{1, 0}, {0, -1}}, v2(3, 4), 5));
    const InvolutionPair g = oracle::load_pair("planar_generic_t3");
    CHECK(reversed_orbit_check(compose_f(g), g.phi2(), v2(1, 1), 10));
    CHECK_THROWS_AS(reversed_orbit_check(compose_f(c), Matrix::diagonal({1, 2}), v2(1, 0), 3), precondition_error);
}

TEST_CASE("reversed orbits hold for random rational points") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 7);
    for (const std::string& name : oracle::valid_fixtures()) {
        const InvolutionPair p = oracle::load_pair(name);
        const Matrix f = compose_f(p);
        for (Family fam : {Family::unprimed, Family::primed}) {
            for (const Matrix& phi : reversor_sequence(p, 5, fam)) {
                for (int i = 0; i < 20; ++i) {
                    Vector x(p.dim());
                    for (auto& c : x) c = Scalar(num(rng), den(rng));
                    CHECK(reversed_orbit_check(f, phi, x, 10));
                }
            }
        }
    }
}

TEST_CASE("periodic certificate examples") {
    const PeriodicityReport abelian = periodic_certificates(oracle::load_pair("planar_abelian"), 4);
    bool found = false;
    for (const PeriodCertificate& c : abelian.certificates) {
        if (c.flavor == CertificateFlavor::A && c.k == 1 && c.l == 3) {
            found = true;
            CHECK(c.point == v2(0, 1));
            CHECK(c.period_divisor == 2);
        }
    }
    CHECK(found);

    const PeriodicityReport rot = periodic_certificates(oracle::load_pair("planar_generic_t0"), 6);
    bool divisor4 = false;
    for (const PeriodCertificate& c : rot.certificates) divisor4 = divisor4 || c.period_divisor == 4;
    CHECK(divisor4);
    const auto f0 = oracle::from_matrix(compose_f(oracle::load_pair("planar_generic_t0")));
    CHECK(oracle::power(f0, 4) == oracle::identity(2));

    const PeriodicityReport contained = periodic_certificates(oracle::load_pair("planar_contained"), 6);
    for (const PeriodCertificate& c : contained.certificates) {
        CHECK_FALSE((c.flavor == CertificateFlavor::A && c.k == 2 && c.l == 4));
    }
    CHECK(contained.trivial_intersections > 0);
    CHECK_THROWS_AS(periodic_certificates(oracle::load_pair("planar_abelian"), 1), precondition_error);
}

TEST_CASE("every certificate satisfies its period under independent iteration") {
    for (const std::string& name : oracle::valid_fixtures()) {
        const InvolutionPair p = oracle::load_pair(name);
        const PeriodicityReport r = periodic_certificates(p, 6);
        const Matrix f = compose_f(p);
        CHECK(r.converse_checks == 15 + 15 + 35);
        for (const PeriodCertificate& c : r.certificates) {
            CHECK(f.power(c.period_divisor) * c.point == c.point);
            CHECK(c.period_divisor == (c.flavor == CertificateFlavor::C ? c.k + c.l - 2 : c.l - c.k));
        }
    }
}

TEST_CASE("rotation order examples") {
    CHECK(rotation_order(Scalar(-1), 100) == 3);
    CHECK(rotation_order(Scalar(0), 100) == 4);
    CHECK(rotation_order(Scalar(1), 100) == 6);
    CHECK_FALSE(rotation_order(Scalar(1, 2), 10000).has_value());
    CHECK(rotation_order(parse_scalar("-1/2+1/2*sqrt(5)"), 100) == 5);
    CHECK_THROWS_AS(rotation_order(Scalar(2), 10), precondition_error);
    CHECK_THROWS_AS(rotation_order(Scalar(-3), 10), precondition_error);
}

TEST_CASE("rotation order bounds every orbit period") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> num(-9, 9);
    for (int ti : {-1, 0, 1}) {
        const auto q = rotation_order(Scalar(ti), 100);
        REQUIRE(q.has_value());
        const Matrix f = generic_normal_map(Scalar(ti));
        for (int i = 0; i < 10; ++i) {
            const Vector x = v2(Scalar(num(rng), 3), Scalar(num(rng), 2));
            CHECK(orbit(f, x, *q).back() == x);
        }
    }
}

TEST_CASE("limit directions, parabolic trace 2") {
    const LimitReport r = limit_directions(oracle::load_pair("planar_generic_t2"), 40);
    CHECK(r.kind == "parabolic");
    for (const FamilyLimit& fl : r.families) {
        CHECK(oracle::same_line(fl.limit_direction, v2(1, -2)));
        CHECK(fl.monotone);
        CHECK_FALSE(fl.deviations[0].has_value());
        for (int k = 2; k <= 40; ++k) {
            const Scalar expected = Scalar(fl.family == Family::unprimed ? 2 : -2, k - 1);
            CHECK(fl.deviations[static_cast<std::size_t>(k - 1)] == expected);
        }
    }
}

TEST_CASE("limit directions, contained pair approaches the vertical axis") {
    const LimitReport r = limit_directions(oracle::load_pair("planar_contained"), 30);
    for (const FamilyLimit& fl : r.families) {
        CHECK(fl.limit_direction == v2(0, 1));
        CHECK(fl.monotone);
        for (int k = 4; k <= 30; k += 2) {
            const Scalar expected = fl.family == Family::unprimed ? Scalar(1, k / 2 - 1) : Scalar(-1, k / 2);
            CHECK(fl.deviations[static_cast<std::size_t>(k - 1)] == expected);
        }
        for (int k = 3; k <= 30; k += 2) CHECK(fl.deviations[static_cast<std::size_t>(k - 1)] == Scalar(0));
    }
}

TEST_CASE("limit directions, hyperbolic traces") {
    for (int ti : {3, -3}) {
        const InvolutionPair p = planar_generic_form(Scalar(ti));
        const EigenFrame e = eigen_frame(Scalar(ti));
        const LimitReport r = limit_directions(p, 30);
        CHECK(r.kind == "hyperbolic");
        const Scalar lp = *e.lambda_plus;
        const Scalar lm = *e.lambda_minus;
        const bool plus_expands = lp.abs() > Scalar(1);
        const Vector expanding = (*e.beta_basis)[plus_expands ? 0 : 1];
        const Vector contracting = (*e.beta_basis)[plus_expands ? 1 : 0];
        for (const FamilyLimit& fl : r.families) {
            CHECK(fl.monotone);
            const bool primed = fl.family == Family::primed;
            CHECK(fl.limit_direction == (primed ? expanding : contracting));
            // Both families deviate by -mu^(k-1), mu the contracting eigenvalue.
            const Scalar mu = plus_expands ? lm : lp;
            Scalar power = 1;
            for (int k = 1; k <= 30; ++k) {
                CHECK(fl.deviations[static_cast<std::size_t>(k - 1)] == -power);
                power = power * mu;
            }
        }
    }
    CHECK_THROWS_AS(limit_directions(oracle::load_pair("planar_generic_t1"), 10), precondition_error);
    CHECK_THROWS_AS(limit_directions(oracle::load_pair("planar_abelian"), 10), precondition_error);
}

TEST_CASE("limit directions in the quotient plane of the triple-block pair") {
    for (const char* name : {"triple_block_n3", "triple_block_n5"}) {
        const InvolutionPair p = oracle::load_pair(name);
        const LimitReport r = limit_directions(p, 20);
        CHECK(r.kind == "parabolic");
        for (const FamilyLimit& fl : r.families) {
            CHECK(fl.monotone);
            CHECK(oracle::same_line(fl.limit_direction, v2(1, -2)));
            CHECK(fl.limit.dim() == p.dim() - 1);
        }
    }
}

TEST_CASE("sector map worked examples on the contained pair") {
    const InvolutionPair c = oracle::load_pair("planar_contained");
    const SectorMapResult a = sector_map(c, 6, v2(2, 1));
    CHECK(sector_between(a.arrangement, a.source, v2(1, 0), v2(1, 1)));
    CHECK(sector_between(a.arrangement, a.image, v2(-1, 1), v2(-1, 0)));
    CHECK(a.boundaries_match);
    CHECK_FALSE(a.truncation_bounded);
    CHECK(a.mapped_from == std::vector<ReversorLabel>{{Family::primed, 2}});

    const SectorMapResult b = sector_map(c, 6, v2(-1, Scalar(3, 2)));
    CHECK(sector_between(b.arrangement, b.source, v2(-1, 2), v2(-1, 1)));
    CHECK(sector_between(b.arrangement, b.image, v2(1, -3), v2(1, -2)));
    CHECK(b.boundaries_match);

    CHECK_THROWS_AS(sector_map(c, 6, v2(1, 1)), precondition_error);
}

TEST_CASE("sector map on the abelian pair swaps opposite quadrants") {
    const InvolutionPair a = oracle::load_pair("planar_abelian");
    const SectorMapResult r = sector_map(a, 4, v2(1, 1));
    CHECK(r.arrangement.sectors.size() == 4);
    CHECK(r.arrangement.locate(v2(-1, -1)) == r.image);
    const SectorPermutation perm = sector_permutation(a, 4);
    CHECK(perm.same_arrangement);
    CHECK(perm.bijective);
    for (std::size_t j = 0; j < 4; ++j) CHECK(perm.image[j] == (j + 2) % 4);
}

TEST_CASE("sector arrangement ordering and permutation") {
    const InvolutionPair c = oracle::load_pair("planar_contained");
    const SectorArrangement arr = sector_arrangement(c, 6);
    CHECK(arr.lines.size() == 7);
    CHECK(arr.sectors.size() == 14);
    for (std::size_t i = 1; i < arr.lines.size(); ++i) {
        const Vector& a = arr.lines[i - 1].direction;
        const Vector& b = arr.lines[i].direction;
        CHECK((a[0] * b[1] - a[1] * b[0]).sign() > 0);
    }
    const SectorPermutation perm = sector_permutation(c, 6);
    CHECK(perm.bijective);
    CHECK(perm.consistent_with_links);
    CHECK_FALSE(perm.same_arrangement);

    // The golden-ratio rotation has five lines; its arrangement is F-invariant.
    const SectorPermutation rot = sector_permutation(oracle::load_pair("planar_generic_rot5"), 10);
    CHECK(rot.same_arrangement);
    CHECK(rot.bijective);
    CHECK(rot.consistent_with_links);
}

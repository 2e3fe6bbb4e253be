#include <doctest.h>

#include <random>

#include "revmap/errors.hpp"
#include "revmap/matrix.hpp"
#include "revmap/scalar.hpp"
#include "revmap/subspace.hpp"
#include "support/oracle.hpp"

using namespace revmap;

namespace {

Subspace span2(std::initializer_list<Vector> vs, std::size_t n) {
    return Subspace::span(n, std::vector<Vector>(vs));
}

}  // namespace

TEST_CASE("scalar parsing and canonical text") {
    CHECK(parse_scalar("3/6") == Scalar(1, 2));
    CHECK(parse_scalar("-4/2") == Scalar(-2));
    CHECK(parse_scalar("1/2+3/4*sqrt(5)") == Scalar(Rational(1, 2), Rational(3, 4), 5));
    CHECK(parse_scalar("-sqrt(5)") == Scalar(0, -1, 5));
    CHECK(parse_scalar("3*sqrt(5)").to_string() == "3*sqrt(5)");
    CHECK(parse_scalar("-1/2+1/2*sqrt(5)").to_string() == "-1/2+1/2*sqrt(5)");
    CHECK_THROWS_AS(parse_scalar("1/0"), parse_error);
    CHECK_THROWS_AS(parse_scalar("abc"), parse_error);
    CHECK_THROWS_AS(parse_scalar("sqrt(4)"), parse_error);
    CHECK_THROWS_AS(parse_scalar("sqrt(5)", 2), parse_error);
}

TEST_CASE("scalar field arithmetic is exact") {
    const Scalar r5 = Scalar::sqrt_of(5);
    const Scalar phi = (Scalar(1) + r5) / Scalar(2);
    CHECK(phi * phi == phi + Scalar(1));
    CHECK(phi * phi.inverse() == Scalar(1));
    CHECK((phi - r5) + r5 == phi);
    CHECK(r5 - r5 == Scalar(0));
    CHECK((r5 - r5).radicand() == 0);
    CHECK(Scalar(2) < r5);
    CHECK(r5 < Scalar(3));
    CHECK((Scalar(2) - r5).sign() < 0);
    CHECK(sqrt_rational(Rational(5)) == r5);
    CHECK(sqrt_rational(Rational(9, 4)) == Scalar(3, 2));
    CHECK_THROWS_AS(Scalar(0, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(r5 + Scalar::sqrt_of(2), context_error);
    CHECK_THROWS(Scalar(0).inverse());
}

TEST_CASE("rref examples") {
    const RrefResult id = rref(Matrix::identity(2));
    CHECK(id.reduced == Matrix::identity(2));
    CHECK(id.rank == 2);
    const RrefResult r = rref(Matrix{{-2, 0}, {1, 0}});
    CHECK(r.reduced == Matrix{{1, 0}, {0, 0}});
    CHECK(r.rank == 1);
    const RrefResult z = rref(Matrix::zero(3, 3));
    CHECK(z.reduced == Matrix::zero(3, 3));
    CHECK(z.rank == 0);
    CHECK(rref(r.reduced).reduced == r.reduced);
}

TEST_CASE("kernel examples") {
    CHECK(kernel(Matrix::identity(2)).is_zero());
    CHECK(kernel(Matrix{{-2, 0}, {1, 0}}) == span2({{0, 1}}, 2));
    CHECK(kernel(Matrix::zero(2, 2)).is_full());
}

TEST_CASE("intersection, sum and image examples") {
    CHECK(subspace_intersect(span2({{1, 0}}, 2), span2({{0, 1}}, 2)).is_zero());
    CHECK(subspace_intersect(Subspace::full(2), span2({{1, 1}}, 2)) == span2({{1, 1}}, 2));
    const Subspace xy = span2({{1, 0, 0}, {0, 1, 0}}, 3);
    const Subspace yz = span2({{0, 1, 0}, {0, 0, 1}}, 3);
    CHECK(subspace_intersect(xy, yz) == span2({{0, 1, 0}}, 3));
    CHECK(subspace_sum(span2({{1, 0}}, 2), span2({{0, 1}}, 2)).is_full());
    const Subspace u = span2({{1, 1}}, 2);
    CHECK(apply(Matrix::identity(2), u) == u);
    const Matrix f{{-1, 0}, {1, -1}};
    CHECK(apply(f, u) == span2({{1, 0}}, 2));
    CHECK_THROWS_AS(apply(Matrix{{1, 0}, {0, 0}}, u), singular_matrix_error);
    CHECK_THROWS_AS(subspace_intersect(u, xy), dimension_error);
}

TEST_CASE("matrix basics") {
    const Matrix a{{1, 2}, {3, 4}};
    CHECK(a.determinant() == Scalar(-2));
    CHECK(a.inverse() * a == Matrix::identity(2));
    CHECK(a.power(-1) == a.inverse());
    CHECK(a.power(3) == a * a * a);
    CHECK(unvec(vec(a), 2, 2) == a);
    CHECK(vec(a) == Vector{1, 3, 2, 4});
    CHECK(kron(Matrix::identity(2), a).block(2, 2, 2, 2) == a);
    CHECK_THROWS_AS(Matrix({{1, 2}, {2, 4}}).inverse(), singular_matrix_error);
    CHECK_THROWS_AS(a * Matrix::identity(3), dimension_error);
}

TEST_CASE("random rational inverses are exact") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_int_distribution<int> size(1, 4);
    int invertible = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = static_cast<std::size_t>(size(rng));
        Matrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(num(rng), den(rng));
        const bool singular = oracle::det(oracle::from_matrix(m)) == 0;
        CHECK(m.is_invertible() == !singular);
        if (singular) {
            CHECK_THROWS_AS(m.inverse(), singular_matrix_error);
            continue;
        }
        ++invertible;
        CHECK(m.inverse() * m == Matrix::identity(n));
    }
    CHECK(invertible > 500);
}

TEST_CASE("matrix multiplication is associative over Q(sqrt 5)") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(-5, 5);
    auto random = [&] {
        Matrix m(3, 3);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t k = 0; k < 3; ++k) m(r, k) = Scalar(Rational(c(rng)), Rational(c(rng), 2), 5);
        return m;
    };
    for (int t = 0; t < 20; ++t) {
        const Matrix a = random(), b = random(), d = random();
        CHECK((a * b) * d == a * (b * d));
    }
}

TEST_CASE("grassmann identity and canonical bases on random subspaces") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-2, 2);
    for (std::size_t n = 2; n <= 6; ++n) {
        std::uniform_int_distribution<std::size_t> count(0, n);
        for (int t = 0; t < 30; ++t) {
            auto random_vectors = [&](std::size_t k) {
                std::vector<Vector> out(k, Vector(n));
                for (auto& v : out)
                    for (auto& x : v) x = c(rng);
                return out;
            };
            const auto uv = random_vectors(count(rng));
            const auto vv = random_vectors(count(rng));
            const Subspace u = Subspace::span(n, uv);
            const Subspace v = Subspace::span(n, vv);
            const Subspace meet = subspace_intersect(u, v);
            CHECK(subspace_sum(u, v).dim() + meet.dim() == u.dim() + v.dim());
            // Oracle: each intersection vector lies in both spans.
            std::vector<std::vector<mpq_class>> ur, vr;
            for (const auto& x : uv) ur.push_back(oracle::rational_vector(x));
            for (const auto& x : vv) vr.push_back(oracle::rational_vector(x));
            for (const Vector& w : meet.basis()) {
                CHECK(oracle::in_span(ur, oracle::rational_vector(w)));
                CHECK(oracle::in_span(vr, oracle::rational_vector(w)));
            }
            CHECK(u.dim() == oracle::rank(ur));
            // A different spanning set of the same space compares equal.
            std::vector<Vector> mixed = u.basis();
            for (std::size_t i = 1; i < mixed.size(); ++i) mixed[i] = mixed[i] + Scalar(c(rng)) * mixed[i - 1];
            std::reverse(mixed.begin(), mixed.end());
            CHECK(Subspace::span(n, mixed) == u);
        }
    }
}

#include <doctest.h>

#include <random>

#include "revmap/classify.hpp"
#include "revmap/errors.hpp"
#include "revmap/symgroups.hpp"
#include "support/oracle.hpp"

using namespace revmap;

namespace {

// Random element of a matrix space; retried until invertible.
Matrix random_invertible_member(const MatrixSpace& space, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-3, 3);
    for (;;) {
        Matrix m = Matrix::zero(space.n, space.n);
        for (const Matrix& b : space.basis()) m += b * Scalar(c(rng));
        if (m.is_invertible()) return m;
    }
}

}  // namespace

TEST_CASE("symmetry space examples") {
    const Matrix f = compose_f(oracle::load_pair("planar_contained"));
    const MatrixSpace sym = symmetry_space(f);
    CHECK(sym.dim() == 2);
    CHECK(sym == MatrixSpace::span(2, {Matrix{{1, 0}, {0, 1}}, Matrix{{0, 0}, {1, 0}}}));

    const Scalar t(3);
    const MatrixSpace sym3 = symmetry_space(compose_f(planar_generic_form(t)));
    CHECK(sym3.dim() == 2);
    // Parameterisation {[[a + (2+t)b, b], [-(2+t)b, a]]}.
    CHECK(sym3 == MatrixSpace::span(2, {Matrix::identity(2), Matrix{{Scalar(2) + t, 1}, {-(Scalar(2) + t), 0}}}));
    CHECK(symmetry_space(Matrix::identity(3)).dim() == 9);
    CHECK_THROWS_AS(symmetry_space(Matrix::zero(2, 2)), singular_matrix_error);
}

TEST_CASE("reversing space examples") {
    const Matrix f = compose_f(oracle::load_pair("planar_contained"));
    CHECK(reversing_space(f) == MatrixSpace::span(2, {Matrix{{1, 0}, {0, -1}}, Matrix{{0, 0}, {1, 0}}}));

    const Matrix f3 = compose_f(oracle::load_pair("triple_block_n3"));
    const MatrixSpace rev3 = reversing_space(f3);
    CHECK(rev3.dim() == 3);
    auto param = [](int a, int b, int c) {
        return Matrix{{-a, -b, 0}, {4 * (a - b), a, 0}, {2 * (b + c), c, a - 2 * b}};
    };
    CHECK(rev3 == MatrixSpace::span(3, {param(1, 0, 0), param(0, 1, 0), param(0, 0, 1)}));

    const Matrix minus = -Matrix::identity(2);
    CHECK(reversing_space(minus) == symmetry_space(minus));
}

TEST_CASE("membership examples") {
    const InvolutionPair c = oracle::load_pair("planar_contained");
    const Matrix f = compose_f(c);
    CHECK(membership(reversor(c, 4, Family::unprimed), f) == Membership::reversing);
    CHECK(membership(f.power(3), f) == Membership::symmetry);
    const Matrix g = compose_f(planar_generic_form(Scalar(3)));
    CHECK(membership(Matrix::diagonal({1, 2}), g) == Membership::neither);
    CHECK(membership(Matrix{{1, 0}, {0, -1}}, -Matrix::identity(2)) == Membership::both);
    CHECK_THROWS_AS(membership(Matrix::zero(2, 2), f), singular_matrix_error);
}

TEST_CASE("coset examples") {
    CHECK(coset_check(compose_f(planar_generic_form(Scalar(3))), Matrix{{1, 1}, {0, -1}}));
    const InvolutionPair c = oracle::load_pair("planar_contained");
    CHECK(coset_check(compose_f(c), c.phi1()));
    CHECK(coset_check(-Matrix::identity(2), Matrix::identity(2)));
    CHECK_THROWS_AS(coset_check(compose_f(c), Matrix::diagonal({1, 2})), precondition_error);
}

TEST_CASE("basis elements satisfy their equations and dims agree") {
    for (const std::string& name : oracle::valid_fixtures()) {
        const InvolutionPair p = oracle::load_pair(name);
        const Matrix f = compose_f(p);
        const Matrix f_inv = f.inverse();
        const MatrixSpace sym = symmetry_space(f);
        const MatrixSpace rev = reversing_space(f);
        for (const Matrix& s : sym.basis()) CHECK(f * s == s * f);
        for (const Matrix& s : rev.basis()) CHECK(f * s == s * f_inv);
        CHECK(sym.dim() == rev.dim());
        // dim = n^2 - rank of the constraint operator, rank from the oracle.
        const std::size_t n = p.dim();
        const Matrix id = Matrix::identity(n);
        if (name != "planar_generic_rot5") {
            const std::size_t rk = oracle::rank(oracle::from_matrix(kron(id, f) - kron(f.transpose(), id)));
            CHECK(sym.dim() == n * n - rk);
        }
        for (int k = 1; k <= 10; ++k) {
            CHECK(membership(reversor(p, k, Family::unprimed), f) != Membership::symmetry);
            CHECK(rev.contains(reversor(p, k, Family::primed)));
        }
        CHECK(coset_check(f, p.phi1()));
    }
}

TEST_CASE("closure sampling of products") {
    std::mt19937_64 rng(53);
    for (const char* name : {"planar_contained", "planar_generic_t3", "triple_block_n3"}) {
        const InvolutionPair p = oracle::load_pair(name);
        const Matrix f = compose_f(p);
        const MatrixSpace sym = symmetry_space(f);
        const MatrixSpace rev = reversing_space(f);
        for (int i = 0; i < 50; ++i) {
            const Matrix r1 = random_invertible_member(rev, rng);
            const Matrix r2 = random_invertible_member(rev, rng);
            const Matrix s1 = random_invertible_member(sym, rng);
            CHECK(sym.contains(r1 * r2));
            CHECK(rev.contains(s1 * r1));
            CHECK(rev.contains(r1 * s1));
        }
    }
}

TEST_CASE("symmetry space of suspended pairs follows the block count") {
    // dim = dim(core commutant) + l^2 + dim{C : F C = C} + dim{D : D F = D}.
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"suspended_abelian", "planar_abelian"},
        {"suspended_contained", "planar_contained"},
        {"suspended_generic_t3", "planar_generic_t3"},
        {"suspended_parabolic", "planar_generic_t2"},
    };
    for (const auto& [suspended, core_name] : cases) {
        const InvolutionPair big = oracle::load_pair(suspended);
        const InvolutionPair core = oracle::load_pair(core_name);
        const Matrix fc = compose_f(core);
        const std::size_t l = big.dim() - core.dim();
        const std::size_t fix_dim = fixed_subspace(fc).dim();
        const std::size_t row_fix = fixed_subspace(fc.transpose()).dim();
        const std::size_t expected = symmetry_space(fc).dim() + l * l + l * fix_dim + l * row_fix;
        CHECK(symmetry_space(compose_f(big)).dim() == expected);
    }
}

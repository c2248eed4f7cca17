#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "copos/exceptions.hpp"
#include "copos/linalg.hpp"
#include "copos/rational.hpp"

using namespace copos;

TEST_CASE("squarefree decomposition") {
    auto check = [](long long x, long long root, long long radical) {
        SquarefreeParts parts = squarefree_decompose(Integer(x));
        CHECK(parts.square_root == Integer(root));
        CHECK(parts.radical == Integer(radical));
    };
    check(1, 1, 1);
    check(2, 1, 2);
    check(4, 2, 1);
    check(8, 2, 2);
    check(49, 7, 1);
    check(50, 5, 2);
    check(72, 6, 2);
    check(360, 6, 10);
    // Cofactor beyond the trial-division bound: 1009 is prime.
    check(1009LL * 1009LL, 1009, 1);
    check(3LL * 1009LL * 1009LL, 1009, 3);
    CHECK_THROWS_AS(squarefree_decompose(Integer(0)), BadInput);
    CHECK_THROWS_AS(squarefree_decompose(Integer(-4)), BadInput);
}

TEST_CASE("sqrt of rational canonical form") {
    SqrtRational a = SqrtRational::sqrt_of(Rational(9, 4));
    CHECK(a.is_rational());
    CHECK(a.as_rational() == Rational(3, 2));

    SqrtRational b = SqrtRational::sqrt_of(Rational(8));
    CHECK_FALSE(b.is_rational());
    CHECK(b.coef() == Rational(2));
    CHECK(b.rad() == Integer(2));

    SqrtRational c = SqrtRational::sqrt_of(Rational(1, 2));
    CHECK(c.coef() == Rational(1, 2));
    CHECK(c.rad() == Integer(2));

    CHECK(SqrtRational::sqrt_of(Rational(0)).is_zero());
    CHECK_THROWS_AS(SqrtRational::sqrt_of(Rational(-1)), BadInput);
}

TEST_CASE("sqrt arithmetic stays exact") {
    SqrtRational r2 = SqrtRational::sqrt_of(Rational(2));
    SqrtRational prod = r2 * r2;
    CHECK(prod.is_rational());
    CHECK(prod.as_rational() == Rational(2));

    SqrtRational r6 = SqrtRational::sqrt_of(Rational(6));
    SqrtRational r10 = SqrtRational::sqrt_of(Rational(10));
    SqrtRational mixed = r6 * r10;  // sqrt(60) = 2 sqrt(15)
    CHECK(mixed.coef() == Rational(2));
    CHECK(mixed.rad() == Integer(15));

    SqrtRational inv = r2.inverse();  // 1/sqrt(2) = (1/2) sqrt(2)
    CHECK(inv.coef() == Rational(1, 2));
    CHECK(inv.rad() == Integer(2));
    CHECK((inv * r2).as_rational() == Rational(1));

    SqrtRational sum = r2 + r2 * Rational(3, 2);
    CHECK(sum.coef() == Rational(5, 2));
    CHECK(sum.rad() == Integer(2));
    CHECK_THROWS_AS((void)(r2 + r6), PreconditionViolated);

    CHECK((r2 - r2).is_zero());
    CHECK((r2 + (-r2)).is_zero());
}

TEST_CASE("sqrt comparisons are exact") {
    // (3/2) sqrt(5) vs 2 sqrt(3): squares 45/4 vs 12 = 48/4.
    SqrtRational lhs(Rational(3, 2), Integer(5));
    SqrtRational rhs(Rational(2), Integer(3));
    CHECK(lhs < rhs);
    CHECK(rhs > lhs);
    CHECK(-lhs > -rhs);
    CHECK(lhs == SqrtRational(Rational(3, 2), Integer(5)));
    // Constructing through a non-squarefree radicand canonicalizes: 3 sqrt(20) = 6 sqrt(5).
    SqrtRational canon(Rational(3), Integer(20));
    CHECK(canon.coef() == Rational(6));
    CHECK(canon.rad() == Integer(5));
    CHECK(SqrtRational(Rational(0), Integer(7)) == SqrtRational());
}

TEST_CASE("solve_linear unique solution") {
    MatR a(2, 2);
    a << Rational(2), Rational(1), Rational(1), Rational(3);
    VecR b(2);
    b << Rational(5), Rational(10);
    LinearSolution sol = solve_linear(a, b);
    REQUIRE(sol.status == SolveStatus::Unique);
    CHECK(sol.particular(0) == Rational(1));
    CHECK(sol.particular(1) == Rational(3));
    CHECK(sol.nullspace.empty());
}

TEST_CASE("solve_linear underdetermined and inconsistent") {
    MatR a(1, 3);
    a << Rational(1), Rational(2), Rational(-1);
    VecR b(1);
    b << Rational(4);
    LinearSolution sol = solve_linear(a, b);
    REQUIRE(sol.status == SolveStatus::Underdetermined);
    CHECK(a * sol.particular == b);
    REQUIRE(sol.nullspace.size() == 2);
    for (const auto& v : sol.nullspace) {
        CHECK((a * v).isZero(0));
        // First nonzero entry normalized to one.
        Eigen::Index first = 0;
        while (first < v.size() && v(first) == 0) ++first;
        REQUIRE(first < v.size());
        CHECK(v(first) == Rational(1));
    }

    MatR a2(2, 2);
    a2 << Rational(1), Rational(1), Rational(2), Rational(2);
    VecR b2(2);
    b2 << Rational(1), Rational(3);
    CHECK(solve_linear(a2, b2).status == SolveStatus::Inconsistent);
}

TEST_CASE("kernel basis of rank-deficient matrix") {
    MatR a(2, 3);
    a << Rational(1), Rational(1), Rational(1), Rational(0), Rational(1), Rational(2);
    auto basis = kernel_basis(a);
    REQUIRE(basis.size() == 1);
    CHECK((a * basis[0]).isZero(0));
    CHECK(basis[0](0) == Rational(1));
    CHECK(basis[0](1) == Rational(-2));
    CHECK(basis[0](2) == Rational(1));
}

TEST_CASE("vertex enumeration of the standard simplex") {
    MatR m(1, 3);
    m << Rational(1), Rational(1), Rational(1);
    VecR b(1);
    b << Rational(1);
    auto verts = enumerate_vertices(m, b);
    REQUIRE(verts.size() == 3);
    // Lexicographic order: e3, e2, e1.
    CHECK(verts[0](2) == Rational(1));
    CHECK(verts[1](1) == Rational(1));
    CHECK(verts[2](0) == Rational(1));
}

TEST_CASE("vertex enumeration of a product of segments") {
    // {y >= 0 : y1 + y3 = 1, y2 + y4 = 1} is a square with 4 vertices.
    MatR m(2, 4);
    m << Rational(1), Rational(0), Rational(1), Rational(0), Rational(0), Rational(1), Rational(0), Rational(1);
    VecR b(2);
    b << Rational(1), Rational(1);
    auto verts = enumerate_vertices(m, b);
    CHECK(verts.size() == 4);
    for (const auto& v : verts) {
        CHECK(v(0) + v(2) == Rational(1));
        CHECK(v(1) + v(3) == Rational(1));
        CHECK((v(0) == Rational(0) || v(0) == Rational(1)));
    }
}

TEST_CASE("vertex enumeration infeasible and degenerate") {
    MatR m(1, 2);
    m << Rational(1), Rational(1);
    VecR b(1);
    b << Rational(-1);
    CHECK(enumerate_vertices(m, b).empty());

    // Zero matrix, zero rhs: origin is the unique vertex.
    MatR z = MatR::Zero(1, 2);
    VecR zb = VecR::Zero(1);
    auto verts = enumerate_vertices(z, zb);
    REQUIRE(verts.size() == 1);
    CHECK(verts[0].isZero(0));

    // Zero matrix, nonzero rhs: infeasible.
    VecR nb(1);
    nb << Rational(2);
    CHECK(enumerate_vertices(z, nb).empty());
}

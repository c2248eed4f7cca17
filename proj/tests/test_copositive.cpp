#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "copos/copositive.hpp"
#include "copos/exceptions.hpp"
#include "copos/matrix_core.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace copos;

namespace {

IndexSet cyc(int a, int b) {
    return IndexSet{((a - 1) % 5) + 1, ((b - 1) % 5) + 1};
}

SymMatrix pm1_rank1_k22() {
    // v v^T with v = (1,1,-1,-1): G_{-1} = K_{2,2} with parts {1,2} / {3,4}.
    VecR v(4);
    v << Rational(1), Rational(1), Rational(-1), Rational(-1);
    return SymMatrix{MatR(v * v.transpose())};
}

}  // namespace

TEST_CASE("simplex minimum on the basic examples") {
    SimplexMinimum id3 = simplex_minimum(SymMatrix::identity(3));
    CHECK(id3.value == Rational(1, 3));
    REQUIRE(id3.faces.size() == 1);
    CHECK(id3.faces[0].face == IndexSet{1, 2, 3});
    CHECK(id3.faces[0].witness(0) == Rational(1, 3));

    SymMatrix edge = SymMatrix::from_upper_triangle(2, {Rational(1), Rational(-1), Rational(1)});
    SimplexMinimum se = simplex_minimum(edge);
    CHECK(se.value == Rational(0));
    REQUIRE(se.faces.size() == 1);
    CHECK(se.faces[0].face == IndexSet{1, 2});
    CHECK(se.faces[0].witness(0) == Rational(1, 2));

    SimplexMinimum sh = simplex_minimum(horn_matrix());
    CHECK(sh.value == Rational(0));
    CHECK(sh.faces.size() == 10);

    CHECK_THROWS_AS(simplex_minimum(SymMatrix::identity(13)), DimensionTooLarge);
}

TEST_CASE("copositivity decisions") {
    CHECK(is_copositive(horn_matrix()));
    SymMatrix minus_i2 = SymMatrix::from_upper_triangle(2, {Rational(-1), Rational(0), Rational(-1)});
    CHECK_FALSE(is_copositive(minus_i2));

    // Horn with entry (1,2) pushed below -1 stops being copositive:
    // at u = e_1 + e_2 the form evaluates to -1/5.
    SymMatrix h = horn_matrix();
    h.set(0, 1, Rational(-11, 10));
    VecR u = VecR::Zero(5);
    u(0) = 1;
    u(1) = 1;
    CHECK(h.quadratic_form(u) == Rational(-1, 5));
    CHECK_FALSE(is_copositive(h));
}

TEST_CASE("zero supports of the Horn matrix") {
    const SymMatrix h = horn_matrix();
    const std::vector<IndexSet> zs = zero_supports(h);
    REQUIRE(zs.size() == 10);
    const std::vector<IndexSet> expected_pairs = {cyc(1, 2), cyc(2, 3), cyc(3, 4), cyc(4, 5), cyc(5, 1)};
    const std::vector<IndexSet> expected_triples = {IndexSet{1, 2, 3}, IndexSet{2, 3, 4}, IndexSet{3, 4, 5},
                                                    IndexSet{1, 4, 5}, IndexSet{1, 2, 5}};
    for (const auto& s : expected_pairs) CHECK(std::count(zs.begin(), zs.end(), s) == 1);
    for (const auto& s : expected_triples) CHECK(std::count(zs.begin(), zs.end(), s) == 1);

    // Every zero support is PSD on its principal submatrix with an exact
    // kernel witness.
    for (const auto& s : zs) {
        CHECK(is_psd(h.principal_submatrix(s)).psd);
        Zero z = representative_zero(h, s);
        CHECK(z.support == s);
        CHECK(h.quadratic_form(z.vector) == Rational(0));
        VecR restricted = h.mat() * z.vector;
        for (int i : s) CHECK(restricted(i - 1) == Rational(0));
    }
}

TEST_CASE("minimal zeros of the Horn matrix") {
    const MinimalZeroMatrix w = minimal_zeros(horn_matrix());
    REQUIRE(w.supports.size() == 5);
    // Lexicographic support order: {1,2},{1,5},{2,3},{3,4},{4,5}.
    CHECK(w.supports[0] == IndexSet{1, 2});
    CHECK(w.supports[1] == IndexSet{1, 5});
    CHECK(w.supports[2] == IndexSet{2, 3});
    CHECK(w.supports[3] == IndexSet{3, 4});
    CHECK(w.supports[4] == IndexSet{4, 5});
    for (std::size_t k = 0; k < 5; ++k) {
        const VecR& col = w.columns[k];
        for (int i = 1; i <= 5; ++i) {
            CHECK(col(i - 1) == (w.supports[k].contains(i) ? Rational(1) : Rational(0)));
        }
    }
    CHECK(w.as_matrix(5).cols() == 5);
}

TEST_CASE("zero structure of small examples") {
    SymMatrix edge = SymMatrix::from_upper_triangle(2, {Rational(1), Rational(-1), Rational(1)});
    auto zs = zero_supports(edge);
    REQUIRE(zs.size() == 1);
    CHECK(zs[0] == IndexSet{1, 2});
    MinimalZeroMatrix w = minimal_zeros(edge);
    REQUIRE(w.columns.size() == 1);
    CHECK(w.columns[0](0) == Rational(1));
    CHECK(w.columns[0](1) == Rational(1));

    // The zero matrix: every nonempty subset is a zero support; the minimal
    // ones are the singletons with unit-vector zeros.
    SymMatrix z3 = SymMatrix::zero(3);
    CHECK(zero_supports(z3).size() == 7);
    MinimalZeroMatrix wz = minimal_zeros(z3);
    REQUIRE(wz.supports.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(wz.supports[static_cast<std::size_t>(i)] == IndexSet{i + 1});
        CHECK(wz.columns[static_cast<std::size_t>(i)](i) == Rational(1));
    }

    // Strictly copositive: no zero supports at all.
    CHECK(zero_supports(SymMatrix::identity(4)).empty());

    CHECK_THROWS_AS(zero_supports(SymMatrix::from_upper_triangle(1, {Rational(-1)})), NotCopositive);
}

TEST_CASE("every Horn zero support is a union of minimal supports") {
    const auto zs = zero_supports(horn_matrix());
    const auto w = minimal_zeros(horn_matrix());
    for (const auto& s : zs) {
        IndexSet built;
        for (const auto& m : w.supports) {
            if (m.subset_of(s)) built = built.set_union(m);
        }
        CHECK(built == s);
    }
}

TEST_CASE("adjacent minimal supports leave no third minimal support in their union") {
    const auto w = minimal_zeros(horn_matrix());
    for (std::size_t i = 0; i < w.supports.size(); ++i) {
        for (std::size_t j = 0; j < w.supports.size(); ++j) {
            if (i == j) continue;
            const IndexSet& u = w.supports[i];
            const IndexSet& v = w.supports[j];
            if (v.set_difference(u).size() != 1) continue;
            const IndexSet uni = u.set_union(v);
            for (const auto& m : w.supports) {
                if (m.subset_of(uni)) {
                    CHECK((m == u || m == v));
                }
            }
        }
    }
}

TEST_CASE("irreducibility records") {
    IrreducibilityRecord horn_rec = irreducibility(horn_matrix());
    CHECK(horn_rec.n_irreducible);
    CHECK(horn_rec.tilde_n_irreducible);
    for (const auto& [pair, flag] : horn_rec.eij) CHECK(flag);

    IrreducibilityRecord id2 = irreducibility(SymMatrix::identity(2));
    CHECK_FALSE(id2.n_irreducible);
    CHECK_FALSE(id2.tilde_n_irreducible);
    for (const auto& [pair, flag] : id2.eij) CHECK_FALSE(flag);

    SymMatrix edge = SymMatrix::from_upper_triangle(2, {Rational(1), Rational(-1), Rational(1)});
    IrreducibilityRecord er = irreducibility(edge);
    CHECK(er.eij.at({1, 2}));
    CHECK(er.eij.at({1, 1}));
    CHECK(er.eij.at({2, 2}));
    CHECK(er.n_irreducible);
}

TEST_CASE("spn and psd structure tests") {
    CHECK_FALSE(spn_connected_test(horn_matrix()));

    SymMatrix edge = SymMatrix::from_upper_triangle(2, {Rational(1), Rational(-1), Rational(1)});
    CHECK(spn_connected_test(edge));
    CHECK(psd_rank1_pm1_test(edge));

    SymMatrix k22 = pm1_rank1_k22();
    CHECK(psd_rank1_pm1_test(k22));
    CHECK(spn_connected_test(k22));
    CHECK_FALSE(psd_rank1_pm1_test(horn_matrix()));

    // Precondition failures: bad diagonal, entry below -1, disconnected.
    SymMatrix bad_diag = SymMatrix::identity(3);
    bad_diag.set(0, 0, Rational(2));
    CHECK_THROWS_AS(spn_connected_test(bad_diag), PreconditionViolated);

    SymMatrix low = horn_matrix();
    low.set(0, 1, Rational(-2));
    CHECK_THROWS_AS(spn_connected_test(low), PreconditionViolated);

    CHECK_THROWS_AS(spn_connected_test(SymMatrix::identity(2)), PreconditionViolated);
    CHECK_THROWS_AS(psd_rank1_pm1_test(SymMatrix::identity(2)), PreconditionViolated);
}

TEST_CASE("zero supports of a rank-1 +-1 matrix are the mixed subsets") {
    SymMatrix k22 = pm1_rank1_k22();
    auto zs = zero_supports(k22);
    CHECK(zs.size() == 9);
    auto w = minimal_zeros(k22);
    REQUIRE(w.supports.size() == 4);
    CHECK(w.supports[0] == IndexSet{1, 3});
    CHECK(w.supports[3] == IndexSet{2, 4});
    // Union-of-minimal-supports property.
    for (const auto& s : zs) {
        IndexSet built;
        for (const auto& m : w.supports) {
            if (m.subset_of(s)) built = built.set_union(m);
        }
        CHECK(built == s);
    }
}

TEST_CASE("psd plus nonnegative matrices are copositive") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 5;
        MatR b(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) b(i, j) = oracles::random_rational(rng, 2, 2);
        }
        MatR p = b.transpose() * b;
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                Rational nn = oracles::random_rational(rng, 3, 2);
                if (nn < 0) nn = -nn;
                p(i, j) += nn;
                if (j != i) p(j, i) += nn;
            }
        }
        CHECK(is_copositive(SymMatrix{std::move(p)}));
    }
}

TEST_CASE("simplex minimum agrees with the floating grid-descent oracle") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        SymMatrix a = oracles::random_symmetric(rng, 4, 3, 2);
        const double exact = to_double(simplex_minimum(a).value);
        const double approx = oracles::simplex_min_float_oracle(a);
        CHECK(std::abs(exact - approx) <= 1e-6);
    }
}

TEST_CASE("horn matrix entries") {
    const SymMatrix h = horn_matrix();
    CHECK(h.size() == 5);
    CHECK(h.has_unit_diagonal());
    CHECK(h(0, 1) == Rational(-1));
    CHECK(h(0, 4) == Rational(-1));
    CHECK(h(0, 2) == Rational(1));
    CHECK(graph_minus_one(h).is_cycle_graph());
}

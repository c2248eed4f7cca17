// Acceptance gate: eight criteria, one PASS/FAIL line each, exit code equal
// to the number of failed criteria.  Tolerances and runtime limits are pinned
// here as named constants; every numeric expectation is spelled out in full.

#include "copos/case_engine.hpp"
#include "copos/copositive.hpp"
#include "copos/cp_decomp.hpp"
#include "copos/exceptions.hpp"
#include "copos/matrix_core.hpp"
#include "copos/sym_matrix.hpp"
#include "copos/zero_structure.hpp"

#include "oracles.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace copos;

namespace {

constexpr double kSimplexOracleTolerance = 1e-6;
constexpr double kOrthogonalityTolerance = 1e-12;
constexpr double kPositivityFloor = 1e-6;
constexpr double kHornSuiteSecondsLimit = 1.0;
constexpr double kTfSuiteSecondsLimit = 1.0;
constexpr double kCaseSweepSecondsLimit = 30.0;
constexpr int kConservationInstances = 1000;
constexpr int kSimplexOracleInstances = 200;
constexpr int kPsdOracleInstances = 1000;
constexpr int kWitnessInstances = 100;

void require(bool condition, const std::string& what) {
    if (!condition) throw std::runtime_error(what);
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::optional<TheoremReport> g_report;  // produced by criterion 3, reused by 8

// --------------------------------------------------------------------------
// criterion 1: the order-5 exceptional extremal matrix, end to end

void criterion_horn_suite() {
    const Stopwatch timer;
    const SymMatrix h = horn_matrix();
    require(is_copositive(h), "the matrix must be copositive");
    require(!spn_connected_test(h), "the matrix must fail the SPN structure test (it is exceptional)");

    const std::vector<IndexSet> expected_minimal = {{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}};
    const MinimalZeroMatrix mz = minimal_zeros(h);
    require(mz.supports == expected_minimal, "minimal supports must be the five consecutive pairs");
    for (std::size_t k = 0; k < mz.supports.size(); ++k) {
        VecR expected = VecR::Zero(5);
        for (int i : mz.supports[k]) expected(i - 1) = 1;
        require(mz.columns[k] == expected, "minimal zero " + mz.supports[k].to_string() +
                                               " must be the sum of its two unit vectors");
    }

    std::set<IndexSet> expected_supports(expected_minimal.begin(), expected_minimal.end());
    for (const IndexSet& s :
         std::vector<IndexSet>{{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}, {1, 2, 5}})
        expected_supports.insert(s);
    const std::vector<IndexSet> zs = zero_supports(h);
    require(std::set<IndexSet>(zs.begin(), zs.end()) == expected_supports,
            "zero supports must be the five pairs plus the five consecutive triples");

    const IrreducibilityRecord rec = irreducibility(h);
    require(rec.n_irreducible && rec.tilde_n_irreducible,
            "the matrix must be irreducible with respect to every nonnegative perturbation");
    for (const auto& [pair, flag] : rec.eij)
        require(flag, "pair (" + std::to_string(pair.first) + "," + std::to_string(pair.second) +
                          ") must be irreducible");
    require(rec.eij.size() == 15, "expected all 15 index pairs in the record");

    require(timer.seconds() < kHornSuiteSecondsLimit, "suite must finish within 1 s, took " +
                                                          std::to_string(timer.seconds()) + " s");
}

// --------------------------------------------------------------------------
// criterion 2: triangle-free maxima of the reference drawings

void criterion_tf_reproduction() {
    const Stopwatch timer;
    const std::map<int, int> expected_by_case = {{5, 8},  {37, 9}, {38, 8}, {39, 8},
                                                 {40, 8}, {41, 7}, {42, 7}};
    std::map<int, int> seen;
    for (const FigureGraph& fig : figure_graphs()) {
        if (!fig.expected_tf) continue;
        const int value = tf_exact(fig.graph).value;
        require(value == *fig.expected_tf, fig.name + ": computed " + std::to_string(value) +
                                               ", stated " + std::to_string(*fig.expected_tf));
        seen[fig.case_id] = value;
    }
    require(seen == expected_by_case, "the drawings with stated values must be exactly the seven "
                                      "cases 5 and 37-42 with values 8,9,8,8,8,7,7");
    require(tf_exact(LabeledGraph::complete(6)).value == 9,
            "the complete graph on 6 vertices must have triangle-free maximum 9");
    require(timer.seconds() < kTfSuiteSecondsLimit, "suite must finish within 1 s, took " +
                                                        std::to_string(timer.seconds()) + " s");
}

// --------------------------------------------------------------------------
// criterion 3: the 44-case sweep plus the zero-diagonal patterns

void criterion_case_sweep() {
    const Stopwatch timer;
    const TheoremReport report = verify_theorem_main();  // re-verifies every certificate
    require(report.certificates.size() == 44, "expected 44 certificates");

    auto expected_bound = [](int id) {
        if (id <= 2) return 8;
        if (id <= 4) return 9;
        if (id == 5) return 8;
        if (id <= 36) return 9;
        if (id <= 42) return std::map<int, int>{{37, 9}, {38, 9}, {39, 8},
                                                {40, 8}, {41, 7}, {42, 7}}[id];
        return 8;
    };
    for (const BoundCertificate& cert : report.certificates) {
        require(cert.bound == expected_bound(cert.case_id),
                "case " + std::to_string(cert.case_id) + ": bound " + std::to_string(cert.bound) +
                    ", expected " + std::to_string(expected_bound(cert.case_id)));
        if (cert.case_id >= 37 && cert.case_id <= 42)
            require(cert.tf && cert.bound == std::max(7, cert.tf->value),
                    "case " + std::to_string(cert.case_id) +
                        ": bound must be max(7, triangle-free maximum)");
        require(!cert.uses_unsettled_fallback,
                "case " + std::to_string(cert.case_id) + " leans on an unsettled constant");
    }
    require(report.max_bound == 9, "largest bound must be 9");
    require(report.zero_diagonal.cycle_pattern.bound == 7,
            "the cycle-pattern zero-diagonal bound must be 7 (the order-6 wheel value)");
    require(report.zero_diagonal.triples_pattern.bound == 6,
            "the triples-pattern zero-diagonal bound must be 6 (the order-6 star value)");

    g_report = report;
    require(timer.seconds() < kCaseSweepSecondsLimit, "sweep must finish within 30 s, took " +
                                                          std::to_string(timer.seconds()) + " s");
}

// --------------------------------------------------------------------------
// criterion 4: conservation properties of the decomposition rewrites

Rational random_positive(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 4);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

IndexSet random_subset(std::mt19937_64& rng, const std::vector<int>& pool) {
    std::vector<int> picked;
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i : pool)
        if (coin(rng)) picked.push_back(i);
    if (picked.empty())
        picked.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
    return IndexSet(picked);
}

CpTerm random_term(std::mt19937_64& rng, int n, const IndexSet& support) {
    CpTerm t;
    t.v = VecR::Zero(n);
    for (int i : support) t.v(i - 1) = random_positive(rng);
    t.weight = random_positive(rng);
    return t;
}

void check_pairmove_once(std::mt19937_64& rng, bool force_parallel) {
    std::uniform_int_distribution<int> size(3, 6);
    const int n = size(rng);
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    const IndexSet supp_d = random_subset(rng, all);
    const IndexSet supp_b = random_subset(rng, supp_d.indices());
    const CpTerm b = random_term(rng, n, supp_b);
    CpTerm d = force_parallel ? b : random_term(rng, n, supp_d);
    if (force_parallel) {
        const Rational c = random_positive(rng);
        d.v = (b.v * c).eval();
        d.weight = random_positive(rng);
    }

    const MatR before = b.realize() + d.realize();
    const auto [first, second] = pairmove(b, d);
    MatR after = second.realize();
    if (first) after += first->realize();
    require(after == before, "the weighted sum of outer products must be conserved");

    Rational rho;
    bool rho_set = false;
    for (int i : b.support()) {
        const Rational ratio = d.v(i - 1) / b.v(i - 1);
        if (!rho_set || ratio < rho) {
            rho = ratio;
            rho_set = true;
        }
    }
    require(second.support() == d.support(), "the second output's support must equal the outer support");
    if (first) {
        require(first->support().subset_of(d.support()),
                "the first output's support must lie inside the outer support");
        require(d.support().set_difference(b.support()).subset_of(first->support()),
                "the first output must keep every index outside the inner support");
        for (int i : b.support())
            if (d.v(i - 1) == rho * b.v(i - 1))
                require(!first->support().contains(i),
                        "the first output must omit every index attaining the exchange ratio");
    } else {
        require(d.v == (b.v * rho).eval(),
                "the first output may vanish only when the outer term is a multiple of the inner");
    }
}

void criterion_conservation() {
    std::mt19937_64 rng(20250819);
    for (int k = 0; k < kConservationInstances; ++k) check_pairmove_once(rng, k % 10 == 9);

    for (int k = 0; k < kConservationInstances; ++k) {
        std::uniform_int_distribution<int> size(3, 5);
        std::uniform_int_distribution<int> count(1, 6);
        const int n = size(rng);
        std::vector<int> all;
        for (int i = 1; i <= n; ++i) all.push_back(i);
        WeightedCpDecomposition dec;
        dec.n = n;
        const int t = count(rng);
        for (int j = 0; j < t; ++j) dec.terms.push_back(random_term(rng, n, random_subset(rng, all)));
        const MatR before = dec.realize();
        const WeightedCpDecomposition result = distinct_supports(dec);
        require(result.realize() == before, "support separation must conserve the realized matrix");
        require(result.terms.size() <= dec.terms.size(), "support separation must not add terms");
        const std::vector<IndexSet> supports = result.supports();
        for (std::size_t i = 0; i < supports.size(); ++i)
            for (std::size_t j = i + 1; j < supports.size(); ++j)
                require(supports[i] != supports[j], "supports must be pairwise distinct");
    }

    for (int k = 0; k < kConservationInstances; ++k) {
        std::uniform_int_distribution<int> size(2, 5);
        std::uniform_int_distribution<int> zero_coin(0, 2);
        const int n = size(rng);
        // Build a diagonally dominant nonnegative base, then hide the
        // dominance behind a random positive congruence; the scaling vector
        // passed to the decomposition undoes it.
        MatR base = MatR::Zero(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const Rational x = zero_coin(rng) == 0 ? Rational(0) : random_positive(rng);
                base(i, j) = base(j, i) = x;
            }
        for (int i = 0; i < n; ++i) {
            Rational row_sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) row_sum += base(i, j);
            base(i, i) = row_sum + (zero_coin(rng) == 0 ? Rational(0) : random_positive(rng));
        }
        VecR d(n);
        MatR scaled = base;
        for (int i = 0; i < n; ++i) d(i) = random_positive(rng);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) scaled(i, j) = base(i, j) / (d(i) * d(j));
        const SymMatrix a(scaled);
        const WeightedCpDecomposition dec = dd_decomposition(a, d);
        require(SymMatrix(dec.realize()) == a, "the dominance decomposition must realize the input");
        for (const IndexSet& s : dec.supports())
            require(s.size() <= 2, "every term support must have size at most 2");
        require(dec.is_valid(), "the decomposition must be valid");
    }
}

// --------------------------------------------------------------------------
// criterion 5: agreement with the independent oracles

void criterion_oracles() {
    std::mt19937_64 rng(424242);
    for (int k = 0; k < kSimplexOracleInstances; ++k) {
        const SymMatrix a = oracles::random_symmetric(rng, 4);
        const double exact = to_double(simplex_minimum(a).value);
        const double approx = oracles::simplex_min_float_oracle(a);
        require(std::abs(exact - approx) <= kSimplexOracleTolerance,
                "simplex minimum " + std::to_string(exact) + " vs oracle " + std::to_string(approx));
    }

    for (int k = 0; k < kPsdOracleInstances; ++k) {
        const SymMatrix a = oracles::random_symmetric(rng, k % 2 == 0 ? 4 : 5);
        require(is_psd(a).psd == oracles::psd_oracle(a), "PSD decision differs from the oracle");
    }

    std::vector<LabeledGraph> corpus;
    for (const FigureGraph& fig : figure_graphs()) corpus.push_back(fig.graph);
    for (const Table1Entry& entry : load_table1()) corpus.push_back(graph_GM(entry.family));
    corpus.push_back(LabeledGraph::complete(4));
    corpus.push_back(LabeledGraph::complete(5));
    corpus.push_back(LabeledGraph::wheel(5));
    corpus.push_back(LabeledGraph::wheel(6));
    corpus.push_back(LabeledGraph::complete_bipartite(2, 3));
    corpus.push_back(LabeledGraph::cycle(5));
    corpus.push_back(LabeledGraph::path(6));
    int checked = 0;
    for (const LabeledGraph& g : corpus) {
        if (g.edge_count() > 12) continue;
        require(tf_exact(g).value == g.edge_count() - oracles::tf_oracle(g),
                "triangle-free maximum differs from exhaustive enumeration on a corpus graph");
        ++checked;
    }
    require(checked >= 40, "expected at least 40 corpus graphs with at most 12 edges, saw " +
                               std::to_string(checked));
}

// --------------------------------------------------------------------------
// criterion 6: inference rules vs the analytic zero supports

void criterion_rules_match_kernel() {
    const SymMatrix h = horn_matrix();
    SupportFamily family;
    family.n = 5;
    family.supports = minimal_zeros(h).supports;
    const ZeroSupportKnowledge kb = apply_inference_rules(family);

    const std::vector<IndexSet> zs = zero_supports(h);
    const std::set<IndexSet> analytic(zs.begin(), zs.end());
    std::set<IndexSet> confirmed;
    for (const auto& [s, rule] : kb.confirmed) confirmed.insert(s);
    require(confirmed == analytic,
            "the confirmed sets must be exactly the analytic zero supports (five pairs, five triples)");

    for (const IndexSet& skip : std::vector<IndexSet>{{1, 3}, {2, 4}, {3, 5}, {1, 4}, {2, 5}})
        require(kb.is_excluded(skip), "skip pair " + skip.to_string() + " must be excluded");
    require(kb.flags.empty(), "no derivation may overflow the maximal support size");
}

// --------------------------------------------------------------------------
// criterion 7: orthogonal witnesses for positive-Gram factors

void criterion_nearly_positive() {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> zero_coin(0, 5);
    int produced = 0;
    while (produced < kWitnessInstances) {
        MatR y(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                y(i, j) = zero_coin(rng) == 0 ? Rational(0) : random_positive(rng);
        const MatR gram = y * y.transpose();
        bool positive = true;
        for (int i = 0; i < 3 && positive; ++i)
            for (int j = 0; j < 3 && positive; ++j)
                if (!(gram(i, j) > 0)) positive = false;
        if (!positive) continue;  // resample: the hypothesis is an entrywise positive Gram matrix

        const NearlyPositiveWitness witness =
            nearly_positive_witness(y, kPositivityFloor, static_cast<std::uint64_t>(produced));

        // Recompute both claims directly from the returned rotation.
        const Eigen::Matrix3d orth_defect =
            witness.q * witness.q.transpose() - Eigen::Matrix3d::Identity();
        require(orth_defect.cwiseAbs().maxCoeff() <= kOrthogonalityTolerance,
                "the rotation must be orthogonal within 1e-12");
        Eigen::Matrix3d yd;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) yd(i, j) = to_double(y(i, j));
        require((yd * witness.q.transpose()).minCoeff() >= kPositivityFloor,
                "the rotated factor must be entrywise at least 1e-6");
        ++produced;
    }
}

// --------------------------------------------------------------------------
// criterion 8: scope of what has been certified

void criterion_scope() {
    // The order-6 maximum itself is an open constant: the library must mark
    // it unsettled, and no case certificate may rest on it (the sweep's audit
    // already enforces the latter; re-check both here).
    require(max_cp_rank_order(6).uses_unsettled_fallback,
            "the order-6 maximum must be marked unsettled");
    require(!max_cp_rank_order(5).uses_unsettled_fallback,
            "the order-5 maximum is proven and must not be marked unsettled");
    require(g_report.has_value(), "depends on criterion 3 having produced a report");
    for (const BoundCertificate& cert : g_report->certificates)
        require(!cert.uses_unsettled_fallback, "no certificate may lean on the unsettled constant");
    require(g_report->closing_statement.find("orthogonal to an exceptional extremal") !=
                std::string::npos,
            "the closing statement must state the conditional hypothesis");
    require(g_report->closing_statement.find("not decided") != std::string::npos,
            "the closing statement must leave the unconditional question open");
}

struct Criterion {
    int number;
    std::string label;
    std::function<void()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "order-5 exceptional matrix suite (copositivity, zeros, irreducibility)",
         criterion_horn_suite},
        {2, "triangle-free maxima of the reference drawings", criterion_tf_reproduction},
        {3, "44-case cp-rank certification plus zero-diagonal patterns", criterion_case_sweep},
        {4, "decomposition rewrites conserve the realized matrix (1000 instances each)",
         criterion_conservation},
        {5, "independent-oracle agreement (simplex minimum, PSD, triangle-free)",
         criterion_oracles},
        {6, "inference rules reproduce the analytic zero supports", criterion_rules_match_kernel},
        {7, "orthogonal witnesses for positive-Gram factors (100 instances)",
         criterion_nearly_positive},
        {8, "scope: only the conditional bound and the zero-entry reduction are claimed; the "
            "unconditional order-6 maximum stays out of scope",
         criterion_scope},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string verdict = "PASS";
        std::string detail;
        try {
            c.body();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
            ++failures;
        }
        std::cout << "criterion " << c.number << " (" << c.label << "): " << verdict;
        if (!detail.empty()) std::cout << " — " << detail;
        std::cout << "\n";
    }
    return failures;
}

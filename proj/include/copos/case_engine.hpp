#pragma once

// Certified derivation of the central bound: a 6x6 completely positive
// matrix orthogonal to an exceptional extremal copositive matrix has cp-rank
// at most 9.  The 44 potential minimal-support families with positive
// diagonal are each dispatched to the argument pattern that settles them and
// emit a machine-checkable certificate; the zero-diagonal patterns (an
// order-5 exceptional extremal bordered by a zero row) get wheel and star
// certificates.  Every certificate can be re-derived from its payload with
// reverify(), using only the graph, zero-structure, and cp-rank operations.

#include "copos/cp_decomp.hpp"
#include "copos/graph.hpp"
#include "copos/index_set.hpp"
#include "copos/zero_structure.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace copos {

// One row of the embedded table of potential minimal-support families,
// together with the assigned argument pattern and, where the pattern needs
// one, the pivot support.
struct Table1Entry {
    int id = 0;  // 1..44
    SupportFamily family;
    std::string strategy;           // "DD" | "LOW_DEGREE" | "OMEGA_SPLIT" | "TF" | "PRUNE"
    std::optional<IndexSet> pivot;
};

// Argument pattern that produced a certificate.
enum class Strategy {
    DD,            // every zero support is a union of <= 2 members: the
                   // diagonally dominant rewrite gives floor(n^2/4) terms
    LOW_DEGREE,    // pivot member of degree <= 2 in the pruned member graph:
                   // degree + order-5 bound on the remaining members
    OMEGA_SPLIT,   // <= 3 possible supports strictly over the pivot member:
                   // that count + order-5 bound on the remaining members
    TF,            // columns live on member-graph vertices and edges: the
                   // max triangle-free subgraph bound max(k, tf)
    PRUNE_FOREST,  // irreducibility pruning leaves a forest of pair unions
    PRUNE_CUBE,    // adjacent cube-cycle edges exclude each other, capping
                   // the usable edges of the member graph
    PRUNE_HORN,    // rank-1 submatrix rewrite plus degree-2 pivot deletion
    H_PLUS_0,      // zero-diagonal patterns: wheel / star factorization
};
std::string to_string(Strategy s);

// Self-contained witness for one case's cp-rank bound.  Which optional parts
// are filled depends on the strategy; reverify() recomputes the bound from
// them and throws CaseFailed on any mismatch.
struct BoundCertificate {
    int case_id = 0;  // 1..44; 0 for the zero-diagonal certificates
    Strategy strategy = Strategy::DD;
    int bound = 0;

    std::optional<IndexSet> pivot;            // LOW_DEGREE / OMEGA_SPLIT / PRUNE_HORN
    int pivot_degree = -1;                    // degree in the pruned member graph
    std::optional<LabeledGraph> member_graph; // graph on the members (unions small enough)
    std::optional<LabeledGraph> pruned_graph; // member graph minus disproved edges
    std::optional<LabeledGraph> remainder_graph;  // pruned graph minus the pivot
    std::optional<TfResult> tf;               // TF: exact value plus witness subgraph
    std::vector<IndexSet> over_supports;      // possible supports strictly over the pivot
    std::vector<IndexSet> prune_sets;         // 5-sets fed to irreducibility pruning
    std::vector<std::pair<IndexSet, std::string>> exclusions;  // disproved supports used
    std::vector<std::string> derivation;      // the composed bound argument, line by line
    bool uses_unsettled_fallback = false;     // must stay false for a certified case
    std::vector<std::string> notes;           // flags and diagnostics, not load-bearing
};

// Parses the embedded 44-row table after checking its 64-bit FNV-1a
// checksum; throws DataCorrupt on mismatch or malformed content.
std::vector<Table1Entry> load_table1();

// Each strategy throws StrategyInapplicable when its precondition fails and
// returns a certificate with bound and payload filled otherwise.

// Precondition: no 3- or 4-element index set contains three family members,
// so every possible zero support is a union of at most two members.
BoundCertificate strategy_dd(const Table1Entry& entry);

// Precondition: the pivot is a member of degree <= 2 in the pruned member
// graph, and every possible support strictly over the pivot is its union
// with a single neighbor.  Bound: degree + largest order-5 cp-rank (6).
BoundCertificate strategy_low_degree(const Table1Entry& entry, const IndexSet& pivot);

// Precondition: the pivot is a member and at most three possible supports
// strictly contain it.  Bound: that count + largest order-5 cp-rank (6).
BoundCertificate strategy_omega_split(const Table1Entry& entry, const IndexSet& pivot);

// Precondition: every possible zero support is a union of at most two
// members (re-checked directly; when only the weaker size pattern "all
// members of size 3 except at most one" holds, the certificate is flagged
// in notes instead of rejected).  Bound: max(k, tf of the member graph).
BoundCertificate strategy_tf(const Table1Entry& entry);

// Dispatches on the entry's shape: the seven-pair family with two spanning
// 5-cycle patterns (PRUNE_HORN), the eight-triple family with two prunable
// 5-sets (PRUNE_FOREST), and the eight-triple family whose member graph is
// the cube (PRUNE_CUBE).
BoundCertificate strategy_prune(const Table1Entry& entry);

// Runs the entry's assigned strategy, checks the resulting bound is at most
// 9, and re-verifies the certificate independently before returning it.
// Throws CaseFailed when the strategy does not apply, the bound is too
// large, or re-verification fails.
BoundCertificate certify_case(const Table1Entry& entry);

// Bounds for the two zero-diagonal boundary patterns: an order-5 extremal
// with the five-pair cycle supports bordered by a zero row factors through
// the wheel on 6 vertices (bound 7); one with the five-triple cycle
// supports factors through the star on 6 vertices (bound 6).
struct ZeroDiagonalBounds {
    BoundCertificate cycle_pattern;
    BoundCertificate triples_pattern;
};
ZeroDiagonalBounds lemma_h_plus_0();

// Recomputes a certificate's bound from its payload using only graph,
// zero-structure, and cp-rank operations (never the strategy functions).
// Throws CaseFailed naming the first mismatched step.
void reverify(const BoundCertificate& cert, const Table1Entry& entry);
void reverify_zero_diagonal(const ZeroDiagonalBounds& bounds);

// Registry of the eleven reference drawings.  Each carries the graph as
// drawn, the case it illustrates, and the triangle-free value its caption
// states, if any.  Two drawings deviate from the definitional member graph
// (one redraws the case-36 graph after the rank-1 rewrite, one omits a
// member-graph edge of case 38); the note says how.
struct FigureGraph {
    std::string name;  // "fig01".."fig11"
    int case_id = 0;
    LabeledGraph graph;
    std::optional<int> expected_tf;
    std::string note;
};
std::vector<FigureGraph> figure_graphs();

struct FigureComparison {
    std::string name;
    int case_id = 0;
    std::optional<int> expected_tf;       // the caption's value
    std::optional<int> drawing_tf;        // tf_exact on the drawn graph
    std::optional<int> definitional_tf;   // tf_exact on the member graph, when small enough
    std::string note;
};

struct TheoremReport {
    std::vector<BoundCertificate> certificates;  // the 44 cases in id order
    ZeroDiagonalBounds zero_diagonal;
    int max_bound = 0;
    std::vector<FigureComparison> figures;
    std::vector<std::string> also_applicable;  // per-case diagnostics, not load-bearing
    std::vector<std::string> audit;            // constant-audit results
    std::string closing_statement;             // what exactly has been certified
};

// Runs the whole case analysis: loads the table, derives and re-verifies a
// certificate for every case and for the zero-diagonal patterns, audits
// that no bound leans on an unsettled order constant, and cross-checks the
// reference drawings.  Throws CaseFailed if any case exceeds 9 or any
// re-verification fails.  With jobs > 1 the per-case work is spread over
// that many worker threads; the report is identical to the sequential one
// (cases are independent and results are assembled in table order).
TheoremReport verify_theorem_main(int jobs);
inline TheoremReport verify_theorem_main() { return verify_theorem_main(1); }

}  // namespace copos

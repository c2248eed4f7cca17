#pragma once

#include "copos/graph.hpp"
#include "copos/index_set.hpp"

#include <map>
#include <string>
#include <vector>

namespace copos {

// A family of pairwise distinct candidate minimal supports over {1..n}, each
// of size between 2 and n-2, none containing another (a support strictly
// inside another would contradict minimality of the larger one).
struct SupportFamily {
    int n = 0;
    std::vector<IndexSet> supports;

    // Throws InconsistentFamily when the invariants above fail.
    void validate() const;
    bool is_member(const IndexSet& s) const;
};

// Facts derivable about which index sets are / are not zero supports of a
// copositive matrix with unit diagonal whose minimal supports are exactly
// the given family.  Each fact carries the rule that produced it.
struct ZeroSupportKnowledge {
    int n = 0;
    std::map<IndexSet, std::string> confirmed;
    std::map<IndexSet, std::string> excluded;
    // Derivations that reached a set too large to be a zero support (size
    // > n-2): the family cannot be realized; recorded rather than guessed.
    std::vector<std::string> flags;

    bool is_confirmed(const IndexSet& s) const { return confirmed.count(s) > 0; }
    bool is_excluded(const IndexSet& s) const { return excluded.count(s) > 0; }
};

// Fixed-point closure of the support inference rules.  All rules read only
// the support combinatorics: with unit diagonal, a size-2 minimal support
// {i,j} forces entry -1 at (i,j), and the family lists all minimal supports,
// so the -1 pattern inside any candidate set is known exactly.
//
//   seed: every family member is a zero support; every proper subset of a
//         member (of size >= 2) is not (minimality).
//   R1:   two size-2 members sharing one index: their union is a zero
//         support, their symmetric difference is not.
//   R2:   three pairwise-intersecting size-2 members: their union (size 4)
//         is a zero support (flagged instead if larger than n-2).
//   R3:   three members whose pairwise unions are all confirmed: the triple
//         union is a zero support (flagged instead if larger than n-2).
//   R4:   a size-4 candidate containing a size-3 member is a zero support
//         only if it is the union of exactly two members; otherwise it is
//         excluded.
//   R5:   a candidate containing >= 3 members must have size 4 with all
//         those members of size 2 forming K_{1,3} or K_{2,2}; otherwise it
//         is excluded.
//   R6:   a size-4 candidate whose internal size-2 members form a connected
//         spanning graph is a zero support if that graph is complete
//         bipartite (K_{1,3} or K_{2,2}) and is excluded otherwise; with a
//         disconnected or non-spanning internal graph nothing is concluded.
//   R7:   a size-4 candidate whose only internal members are two disjoint
//         size-2 members is excluded when some cross pair between them is
//         the symmetric difference of two intersecting size-2 members: a
//         full-support zero would force the principal submatrix to be PSD,
//         the two -1 entries make the cross entries +-c, and the symmetric
//         difference pins its entry to exactly 1 (SPN 3x3 with even
//         -1-distance gives >= 1, extremality gives = 1), forcing a -1 cross
//         entry whose pair is missing from the family.
//
// Throws InconsistentFamily when a set becomes both confirmed and excluded.
ZeroSupportKnowledge apply_inference_rules(const SupportFamily& family);

// Graph on the family members with an edge where the union of the two
// members is small enough to be a zero support (size <= n-2; = 4 for n = 6).
// Vertex labels render the supports, e.g. "{1,2,5}".
LabeledGraph graph_GM(const SupportFamily& family);

// Over-approximation of the graph whose edges are the pairs whose union is
// an actual zero support: graph_GM minus the edges whose union is excluded.
// Safe for upper bounds: it contains every true union edge.
LabeledGraph graph_GV_over(const SupportFamily& family, const ZeroSupportKnowledge& knowledge);

// Exact maximum triangle-free subgraph (at most 20 edges), with the
// lexicographically smallest optimal witness, re-verified triangle-free.
struct TfResult {
    int value = 0;
    LabeledGraph witness;
};
TfResult tf_exact(const LabeledGraph& g);

// If every unordered pair inside the given 5-element set is covered by a
// family member contained in that set (so each pair carries an irreducible
// direction witnessed by a minimal zero living inside the principal
// submatrix), then no size-4 subset of the set can be a zero support, and
// all five of them are returned for exclusion.  Otherwise returns empty.
std::vector<IndexSet> irreducibility_prune(const SupportFamily& family, const IndexSet& five_subset);

}  // namespace copos

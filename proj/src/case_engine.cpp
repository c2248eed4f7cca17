#include "copos/case_engine.hpp"

#include "copos/copositive.hpp"
#include "copos/exceptions.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>

namespace copos {

namespace {

#include "table1_data.inc"

std::uint64_t fnv1a(const char* data, std::size_t len) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= static_cast<unsigned char>(data[i]);
        h *= 0x100000001b3ULL;
    }
    return h;
}

IndexSet set_from_json(const nlohmann::json& arr) {
    std::vector<int> v;
    for (const auto& x : arr) v.push_back(x.get<int>());
    return IndexSet(std::move(v));
}

// All candidate zero supports: unions of member subsets that are small
// enough (size <= n-2) and not disproved.  Sound over-approximation: every
// zero support is a union of minimal supports and the disproofs are exact.
std::vector<IndexSet> possible_supports(const SupportFamily& fam, const ZeroSupportKnowledge& kb) {
    const int k = static_cast<int>(fam.supports.size());
    std::set<IndexSet> out;
    for (std::uint32_t sel = 1; sel < (1u << k); ++sel) {
        IndexSet u;
        for (int i = 0; i < k; ++i)
            if (sel & (1u << i)) u = u.set_union(fam.supports[static_cast<std::size_t>(i)]);
        if (u.size() <= fam.n - 2 && !kb.is_excluded(u)) out.insert(u);
    }
    return {out.begin(), out.end()};
}

std::vector<IndexSet> members_inside(const SupportFamily& fam, const IndexSet& u) {
    std::vector<IndexSet> out;
    for (const auto& s : fam.supports)
        if (s.subset_of(u)) out.push_back(s);
    return out;
}

bool is_union_of_at_most_two(const SupportFamily& fam, const IndexSet& u) {
    if (fam.is_member(u)) return true;
    const auto inside = members_inside(fam, u);
    for (std::size_t i = 0; i < inside.size(); ++i)
        for (std::size_t j = i + 1; j < inside.size(); ++j)
            if (inside[i].set_union(inside[j]) == u) return true;
    return false;
}

// Member-graph edges dropped by the knowledge, with the disproof that
// dropped each (the payload a certificate records as its exclusion list).
std::vector<std::pair<IndexSet, std::string>> dropped_edges(const SupportFamily& fam,
                                                            const ZeroSupportKnowledge& kb,
                                                            const LabeledGraph& gm,
                                                            const LabeledGraph& gv) {
    std::vector<std::pair<IndexSet, std::string>> out;
    std::set<IndexSet> seen;
    for (const auto& [u, v] : gm.edges()) {
        if (gv.has_edge(u, v)) continue;
        const IndexSet un =
            fam.supports[static_cast<std::size_t>(u)].set_union(fam.supports[static_cast<std::size_t>(v)]);
        if (!seen.insert(un).second) continue;
        auto it = kb.excluded.find(un);
        out.emplace_back(un, it == kb.excluded.end() ? std::string("(no recorded disproof)") : it->second);
    }
    return out;
}

std::string join_sets(const std::vector<IndexSet>& sets) {
    std::string out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i) out += ", ";
        out += sets[i].to_string();
    }
    return out;
}

// Supports strictly containing the pivot among the possible supports.
std::vector<IndexSet> supports_over_pivot(const std::vector<IndexSet>& possible, const IndexSet& pivot) {
    std::vector<IndexSet> out;
    for (const auto& u : possible)
        if (pivot.subset_of(u) && u != pivot) out.push_back(u);
    return out;
}

// Every possible support must keep its internal member pairs inside the
// graph the bound is computed on, so that decomposition columns (each
// spanned by the minimal zeros of the members inside its support) only
// produce co-occurrences along edges of that graph.  `exempt` marks one
// support handled separately by a rewrite.
void check_column_containment(const SupportFamily& fam, const std::vector<IndexSet>& possible,
                              const LabeledGraph& g, const std::optional<IndexSet>& exempt,
                              const std::string& who) {
    for (const auto& u : possible) {
        if (exempt && u == *exempt) continue;
        const auto inside = members_inside(fam, u);
        for (std::size_t i = 0; i < inside.size(); ++i)
            for (std::size_t j = i + 1; j < inside.size(); ++j) {
                const int a = g.index_of(inside[i].to_string());
                const int b = g.index_of(inside[j].to_string());
                if (a < 0 || b < 0 || !g.has_edge(a, b))
                    throw CaseFailed(who + ": possible support " + u.to_string() +
                                     " needs member pair " + inside[i].to_string() + ", " +
                                     inside[j].to_string() + " outside the pruned graph");
            }
    }
}

void append(std::vector<std::string>& dst, const std::vector<std::string>& src, const std::string& prefix) {
    for (const auto& line : src) dst.push_back(prefix + line);
}

// ----- DD ------------------------------------------------------------------

// Core of the DD precondition: a 3- or 4-element index set containing three
// members would allow a zero support that is not a union of two members.
std::optional<IndexSet> find_crowded_set(const SupportFamily& fam) {
    for (std::uint32_t mask = 0; mask < (1u << fam.n); ++mask) {
        const IndexSet sigma = IndexSet::from_mask(mask);
        if (sigma.size() < 3 || sigma.size() > 4) continue;
        if (members_inside(fam, sigma).size() >= 3) return sigma;
    }
    return std::nullopt;
}

BoundCertificate make_dd(const Table1Entry& entry) {
    entry.family.validate();
    const auto kb = apply_inference_rules(entry.family);
    if (const auto crowded = find_crowded_set(entry.family))
        throw StrategyInapplicable("DD: index set " + crowded->to_string() + " contains three members");

    BoundCertificate cert;
    cert.case_id = entry.id;
    cert.strategy = Strategy::DD;
    const int n = entry.family.n;
    const int k = static_cast<int>(entry.family.supports.size());
    cert.bound = std::max(k, (k * k) / 4);
    cert.member_graph = graph_GM(entry.family);
    cert.derivation = {
        "no 3- or 4-element index set contains three members, so every zero support (a union "
        "of members of size at most " + std::to_string(n - 2) + ") is a union of at most two members",
        "columns map to vertices and edges of the member graph on k = " + std::to_string(k) +
            " vertices, and a minimal decomposition uses a triangle-free edge set, of size at "
            "most floor(k^2/4) = " + std::to_string((k * k) / 4) + " by Mantel's bound",
        "bound = max(" + std::to_string(k) + ", " + std::to_string((k * k) / 4) + ") = " +
            std::to_string(cert.bound),
    };
    append(cert.notes, kb.flags, "inference flag: ");
    return cert;
}

// ----- LOW_DEGREE / OMEGA_SPLIT ---------------------------------------------

struct PivotContext {
    ZeroSupportKnowledge kb;
    LabeledGraph gm;
    LabeledGraph gv;
    int pivot_vertex = -1;
    std::vector<IndexSet> possible;
    std::vector<IndexSet> over;
};

PivotContext pivot_context(const Table1Entry& entry, const IndexSet& pivot, const std::string& who) {
    entry.family.validate();
    if (!entry.family.is_member(pivot))
        throw StrategyInapplicable(who + ": pivot " + pivot.to_string() + " is not a family member");
    PivotContext ctx;
    ctx.kb = apply_inference_rules(entry.family);
    ctx.gm = graph_GM(entry.family);
    ctx.gv = graph_GV_over(entry.family, ctx.kb);
    ctx.pivot_vertex = ctx.gv.index_of(pivot.to_string());
    ctx.possible = possible_supports(entry.family, ctx.kb);
    ctx.over = supports_over_pivot(ctx.possible, pivot);
    return ctx;
}

// Shared tail: the columns whose support contains the pivot are capped by
// `cap`; the rest combine the minimal zeros of the other members, and since
// minimal zeros are unique per support up to scale, that block factors
// through a nonnegative factorization with one generator per remaining
// member, bounding it by the largest cp-rank of that order.
void finish_pivot_bound(BoundCertificate& cert, const PivotContext& ctx, const Table1Entry& entry,
                        const IndexSet& pivot, int cap, const std::string& who) {
    const int rest = static_cast<int>(entry.family.supports.size()) - 1;
    const CprBound order = max_cp_rank_order(rest);
    if (order.uses_unsettled_fallback)
        throw StrategyInapplicable(who + ": the order-" + std::to_string(rest) +
                                   " bound rests on an unsettled constant");
    cert.bound = cap + order.value;
    cert.pivot = pivot;
    cert.pivot_degree = ctx.gv.degree(ctx.pivot_vertex);
    cert.member_graph = ctx.gm;
    cert.pruned_graph = ctx.gv;
    cert.remainder_graph = ctx.gv.minus_vertex(ctx.pivot_vertex);
    cert.over_supports = ctx.over;
    cert.exclusions = dropped_edges(entry.family, ctx.kb, ctx.gm, ctx.gv);
    cert.uses_unsettled_fallback = order.uses_unsettled_fallback;
    cert.derivation.push_back("pair rewrites leave no column supported exactly on the pivot and "
                              "at most one column per distinct possible support strictly over it");
    cert.derivation.push_back("columns avoiding the pivot combine the minimal zeros of the other " +
                              std::to_string(rest) + " members (one ray per support): " +
                              order.derivation.front());
    cert.derivation.push_back("bound = " + std::to_string(cap) + " + " + std::to_string(order.value) +
                              " = " + std::to_string(cert.bound));
    append(cert.notes, ctx.kb.flags, "inference flag: ");
}

BoundCertificate make_low_degree(const Table1Entry& entry, const IndexSet& pivot) {
    auto ctx = pivot_context(entry, pivot, "LOW_DEGREE");
    const int deg = ctx.gv.degree(ctx.pivot_vertex);
    if (deg > 2)
        throw StrategyInapplicable("LOW_DEGREE: pivot " + pivot.to_string() + " has degree " +
                                   std::to_string(deg) + " > 2 in the pruned member graph");
    // Every possible support over the pivot must be a single-neighbor union,
    // so the degree really caps the distinct supports over the pivot.
    for (const auto& u : ctx.over) {
        bool neighbor_union = false;
        for (int nb : ctx.gv.neighbors(ctx.pivot_vertex)) {
            const IndexSet nbs = entry.family.supports[static_cast<std::size_t>(ctx.gm.index_of(
                ctx.gv.label(nb)))];
            if (pivot.set_union(nbs) == u) { neighbor_union = true; break; }
        }
        if (!neighbor_union)
            throw StrategyInapplicable("LOW_DEGREE: support " + u.to_string() +
                                       " over the pivot is not a single-neighbor union");
    }
    BoundCertificate cert;
    cert.case_id = entry.id;
    cert.strategy = Strategy::LOW_DEGREE;
    cert.derivation = {
        "pivot " + pivot.to_string() + " has degree " + std::to_string(deg) +
        " in the pruned member graph; every possible support strictly over it is its union "
        "with a single neighbor (" + join_sets(ctx.over) + ")",
    };
    finish_pivot_bound(cert, ctx, entry, pivot, std::max(deg, 1), "LOW_DEGREE");
    return cert;
}

BoundCertificate make_omega_split(const Table1Entry& entry, const IndexSet& pivot) {
    auto ctx = pivot_context(entry, pivot, "OMEGA_SPLIT");
    const int t = static_cast<int>(ctx.over.size());
    if (t > 3)
        throw StrategyInapplicable("OMEGA_SPLIT: " + std::to_string(t) +
                                   " possible supports strictly over pivot " + pivot.to_string());
    BoundCertificate cert;
    cert.case_id = entry.id;
    cert.strategy = Strategy::OMEGA_SPLIT;
    cert.derivation = {
        "possible supports strictly over pivot " + pivot.to_string() + ": " + join_sets(ctx.over) +
        " (t = " + std::to_string(t) + ")",
    };
    finish_pivot_bound(cert, ctx, entry, pivot, std::max(t, 1), "OMEGA_SPLIT");
    return cert;
}

// ----- TF -------------------------------------------------------------------

BoundCertificate make_tf(const Table1Entry& entry) {
    entry.family.validate();
    const auto kb = apply_inference_rules(entry.family);
    const auto possible = possible_supports(entry.family, kb);

    std::vector<IndexSet> violations;
    for (const auto& u : possible)
        if (!is_union_of_at_most_two(entry.family, u)) violations.push_back(u);

    BoundCertificate cert;
    cert.case_id = entry.id;
    cert.strategy = Strategy::TF;
    if (violations.empty()) {
        cert.derivation.push_back("every possible zero support is a union of at most two members");
    } else {
        int not_size3 = 0;
        for (const auto& s : entry.family.supports)
            if (s.size() != 3) ++not_size3;
        if (not_size3 > 1)
            throw StrategyInapplicable("TF: possible supports beyond two-member unions (" +
                                       join_sets(violations) + ") and " + std::to_string(not_size3) +
                                       " members not of size 3");
        cert.notes.push_back("FLAG: the union-of-two check failed for " + join_sets(violations) +
                             "; proceeding by the zero-triangle argument (at most one member not "
                             "of size 3), which yields the same triangle-free bound");
        cert.derivation.push_back("all members except at most one have size 3, so every zero meets "
                                  "the members it covers in a triangle-free pattern");
    }

    const LabeledGraph gm = graph_GM(entry.family);
    const TfResult tfr = tf_exact(gm);
    const int k = static_cast<int>(entry.family.supports.size());
    cert.bound = std::max(k, tfr.value);
    cert.member_graph = gm;
    cert.tf = tfr;
    cert.derivation.push_back(
        "columns map to vertices and edges of the member graph; a minimal decomposition uses a "
        "triangle-free edge set, so the count is at most max(k, tf) = max(" + std::to_string(k) +
        ", " + std::to_string(tfr.value) + ")");
    cert.derivation.push_back("bound = " + std::to_string(cert.bound));
    append(cert.notes, kb.flags, "inference flag: ");
    return cert;
}

// ----- PRUNE: the seven-pair family (rank-1 rewrite + degree-2 pivot) -------

// The unique confirmed 4-set whose four internal pair members form a 4-cycle;
// its submatrix is then a rank-1 +-1 matrix, which is what licenses the
// rewrite dropping one opposite member pair.
struct RewriteSquare {
    IndexSet square;
    std::vector<IndexSet> cycle_members;      // the four pair members
    std::pair<IndexSet, IndexSet> kept_pair;  // opposite pair whose edge stays
    std::pair<IndexSet, IndexSet> dropped_pair;
};

std::optional<RewriteSquare> find_rewrite_square(const SupportFamily& fam,
                                                 const ZeroSupportKnowledge& kb) {
    for (const auto& [s, why] : kb.confirmed) {
        (void)why;
        if (s.size() != 4) continue;
        const auto inside = members_inside(fam, s);
        if (inside.size() != 4) continue;
        bool all_pairs = true;
        for (const auto& m : inside)
            if (m.size() != 2) all_pairs = false;
        if (!all_pairs) continue;
        LabeledGraph pair_graph;
        for (int i : s.indices()) pair_graph.add_vertex(std::to_string(i));
        for (const auto& m : inside)
            pair_graph.add_edge(std::to_string(m.indices()[0]), std::to_string(m.indices()[1]));
        if (!pair_graph.is_cycle_graph()) continue;

        RewriteSquare rs;
        rs.square = s;
        rs.cycle_members = inside;
        std::vector<std::pair<IndexSet, IndexSet>> opposite;
        for (std::size_t i = 0; i < inside.size(); ++i)
            for (std::size_t j = i + 1; j < inside.size(); ++j)
                if (!inside[i].intersects(inside[j])) opposite.emplace_back(inside[i], inside[j]);
        if (opposite.size() != 2) continue;
        const IndexSet lex_min = *std::min_element(inside.begin(), inside.end());
        if (opposite[0].first == lex_min || opposite[0].second == lex_min) {
            rs.kept_pair = opposite[0];
            rs.dropped_pair = opposite[1];
        } else {
            rs.kept_pair = opposite[1];
            rs.dropped_pair = opposite[0];
        }
        return rs;
    }
    return std::nullopt;
}

// Indices j such that the members avoiding j form a spanning 5-cycle on the
// remaining indices: the restriction of the pattern to those indices is then
// an order-5 extremal cycle pattern.
std::vector<int> spanning_cycle_indices(const SupportFamily& fam) {
    std::vector<int> out;
    for (int j = 1; j <= fam.n; ++j) {
        LabeledGraph g;
        for (int i = 1; i <= fam.n; ++i)
            if (i != j) g.add_vertex(std::to_string(i));
        int used = 0;
        for (const auto& s : fam.supports) {
            if (s.contains(j)) continue;
            if (s.size() != 2) { used = -1; break; }
            g.add_edge(std::to_string(s.indices()[0]), std::to_string(s.indices()[1]));
            ++used;
        }
        if (used == fam.n - 1 && g.is_cycle_graph()) out.push_back(j);
    }
    return out;
}

BoundCertificate make_prune_horn(const Table1Entry& entry) {
    const SupportFamily& fam = entry.family;
    if (!entry.pivot)
        throw StrategyInapplicable("PRUNE_HORN: no pivot recorded for this case");
    const IndexSet pivot = *entry.pivot;
    if (!fam.is_member(pivot))
        throw StrategyInapplicable("PRUNE_HORN: pivot " + pivot.to_string() + " is not a member");

    const auto kb = apply_inference_rules(fam);
    const LabeledGraph gm = graph_GM(fam);
    const LabeledGraph gv = graph_GV_over(fam, kb);

    const auto cycles = spanning_cycle_indices(fam);
    if (cycles.size() != 2)
        throw StrategyInapplicable("PRUNE_HORN: expected two spanning 5-cycle restrictions, found " +
                                   std::to_string(cycles.size()));

    const auto square = find_rewrite_square(fam, kb);
    if (!square)
        throw StrategyInapplicable("PRUNE_HORN: no confirmed 4-set with a 4-cycle of pair members");
    // The two diagonal entries of the square are pinned to +1 (each diagonal
    // is the symmetric difference of two adjacent cycle members), which
    // together with the four -1 members determines the submatrix as the
    // rank-1 +-1 matrix; both diagonals must already be disproved supports.
    for (std::size_t i = 0; i < square->cycle_members.size(); ++i)
        for (std::size_t j = i + 1; j < square->cycle_members.size(); ++j) {
            const IndexSet& a = square->cycle_members[i];
            const IndexSet& b = square->cycle_members[j];
            if (!a.intersects(b)) continue;
            const IndexSet diag = a.set_union(b).set_difference(a.set_intersection(b));
            if (!kb.is_excluded(diag))
                throw CaseFailed("PRUNE_HORN: diagonal " + diag.to_string() +
                                 " of the rewrite square is not a disproved support");
        }

    LabeledGraph g2 = gv;
    {
        const int a = g2.index_of(square->dropped_pair.first.to_string());
        const int b = g2.index_of(square->dropped_pair.second.to_string());
        if (a < 0 || b < 0 || !g2.has_edge(a, b))
            throw CaseFailed("PRUNE_HORN: the rewrite square's dropped edge is missing");
        g2.remove_edge(a, b);
    }
    // The rewrite re-expresses in-square columns over the kept pair plus one
    // member of the dropped pair, so all other pairs of the square's cycle
    // members must survive as edges.
    for (std::size_t i = 0; i < square->cycle_members.size(); ++i)
        for (std::size_t j = i + 1; j < square->cycle_members.size(); ++j) {
            const IndexSet& x = square->cycle_members[i];
            const IndexSet& y = square->cycle_members[j];
            if ((x == square->dropped_pair.first && y == square->dropped_pair.second) ||
                (y == square->dropped_pair.first && x == square->dropped_pair.second))
                continue;
            if (!g2.has_edge(g2.index_of(x.to_string()), g2.index_of(y.to_string())))
                throw CaseFailed("PRUNE_HORN: square pair " + x.to_string() + ", " + y.to_string() +
                                 " is missing from the pruned graph");
        }

    const int pv = g2.index_of(pivot.to_string());
    const int deg = g2.degree(pv);
    if (deg > 2)
        throw StrategyInapplicable("PRUNE_HORN: pivot " + pivot.to_string() + " has degree " +
                                   std::to_string(deg) + " > 2 after the rewrite");

    const auto possible = possible_supports(fam, kb);
    check_column_containment(fam, possible, g2, square->square, "PRUNE_HORN");

    const LabeledGraph remainder = g2.minus_vertex(pv);
    const CprBound rb = cpr_bound_rules(remainder);
    if (rb.uses_unsettled_fallback)
        throw StrategyInapplicable("PRUNE_HORN: remainder bound rests on an unsettled constant");

    BoundCertificate cert;
    cert.case_id = entry.id;
    cert.strategy = Strategy::PRUNE_HORN;
    cert.bound = deg + rb.value;
    cert.pivot = pivot;
    cert.pivot_degree = deg;
    cert.member_graph = gm;
    cert.pruned_graph = g2;
    cert.remainder_graph = remainder;
    cert.exclusions = dropped_edges(fam, kb, gm, gv);
    cert.derivation = {
        "confirmed 4-set " + square->square.to_string() +
            " holds a 4-cycle of pair members with both diagonals pinned to +1: its submatrix "
            "is the rank-1 +-1 matrix, so its four minimal zeros satisfy one linear relation",
        "rewriting along that relation keeps columns inside the square off the member pair " +
            square->dropped_pair.first.to_string() + ", " + square->dropped_pair.second.to_string() +
            " (the pair through " + square->kept_pair.first.to_string() + ", " +
            square->kept_pair.second.to_string() + " stays)",
        "every other possible support keeps its member pairs inside the pruned graph",
        "pivot " + pivot.to_string() + " has degree " + std::to_string(deg) +
            " in the pruned graph; deleting it costs " + std::to_string(deg) + " columns",
    };
    append(cert.derivation, rb.derivation, "remainder: ");
    cert.derivation.push_back("bound = " + std::to_string(deg) + " + " + std::to_string(rb.value) +
                              " = " + std::to_string(cert.bound));
    cert.notes.push_back("restrictions avoiding index " + std::to_string(cycles[0]) + " and index " +
                         std::to_string(cycles[1]) +
                         " are spanning 5-cycles of pair members (order-5 extremal cycle patterns)");
    append(cert.notes, kb.flags, "inference flag: ");
    return cert;
}

// ----- PRUNE: the eight-triple families -------------------------------------

ZeroSupportKnowledge merge_exclusions(const ZeroSupportKnowledge& kb,
                                      const std::vector<std::pair<IndexSet, std::string>>& extra) {
    ZeroSupportKnowledge out = kb;
    for (const auto& [s, why] : extra) {
        if (out.is_confirmed(s))
            throw InconsistentFamily("pruning excluded the confirmed support " + s.to_string());
        out.excluded.emplace(s, why);
    }
    return out;
}

BoundCertificate make_prune_forest(const Table1Entry& entry) {
    const SupportFamily& fam = entry.family;
    const auto kb = apply_inference_rules(fam);

    std::vector<IndexSet> prune_sets;
    std::vector<std::pair<IndexSet, std::string>> extra;
    for (std::uint32_t mask = 0; mask < (1u << fam.n); ++mask) {
        const IndexSet five = IndexSet::from_mask(mask);
        if (five.size() != fam.n - 1) continue;
        const auto banned = irreducibility_prune(fam, five);
        if (banned.empty()) continue;
        prune_sets.push_back(five);
        for (const auto& s : banned)
            extra.emplace_back(s, "irreducibility pruning inside " + five.to_string());
    }
    if (prune_sets.empty())
        throw StrategyInapplicable("PRUNE_FOREST: no 5-set has all its pairs covered by members");

    const auto merged = merge_exclusions(kb, extra);
    const LabeledGraph gm = graph_GM(fam);
    const LabeledGraph gv = graph_GV_over(fam, merged);
    if (!gv.is_forest())
        throw StrategyInapplicable("PRUNE_FOREST: the pruned member graph is not a forest");

    const auto possible = possible_supports(fam, merged);
    check_column_containment(fam, possible, gv, std::nullopt, "PRUNE_FOREST");

    const CprBound rb = cpr_bound_rules(gv);
    if (rb.uses_unsettled_fallback)
        throw StrategyInapplicable("PRUNE_FOREST: forest bound rests on an unsettled constant");

    BoundCertificate cert;
    cert.case_id = entry.id;
    cert.strategy = Strategy::PRUNE_FOREST;
    cert.bound = rb.value;
    cert.member_graph = gm;
    cert.pruned_graph = gv;
    cert.prune_sets = prune_sets;
    cert.exclusions = dropped_edges(fam, merged, gm, gv);
    cert.derivation = {
        "every pair inside " + join_sets(prune_sets) + " is covered by a member inside it, so a "
        "size-4 zero support within either set would make the order-5 principal submatrix both "
        "irreducible in every perturbation direction and positive semidefinite on four indices, "
        "forcing the whole matrix positive semidefinite: all such supports are disproved",
        "the surviving member graph is a forest",
    };
    append(cert.derivation, rb.derivation, "forest: ");
    cert.derivation.push_back("bound = " + std::to_string(cert.bound));
    append(cert.notes, kb.flags, "inference flag: ");
    return cert;
}

BoundCertificate make_prune_cube(const Table1Entry& entry) {
    const SupportFamily& fam = entry.family;
    const LabeledGraph gm = graph_GM(fam);
    const int k = static_cast<int>(fam.supports.size());

    bool cubic = gm.vertex_count() == 8 && gm.edge_count() == 12 && gm.is_triangle_free() &&
                 gm.is_connected() && gm.is_bipartite();
    for (int v = 0; cubic && v < gm.vertex_count(); ++v)
        if (gm.degree(v) != 3) cubic = false;
    if (!cubic)
        throw StrategyInapplicable("PRUNE_CUBE: the member graph is not the 3-regular bipartite "
                                   "graph on 8 vertices and 12 edges");

    // Hub split: two indices such that every member contains exactly one.
    std::optional<std::pair<int, int>> hubs;
    for (int p = 1; p <= fam.n && !hubs; ++p)
        for (int q = p + 1; q <= fam.n && !hubs; ++q) {
            bool ok = true;
            for (const auto& s : fam.supports)
                if (s.contains(p) == s.contains(q)) { ok = false; break; }
            if (ok) hubs = {p, q};
        }
    if (!hubs)
        throw StrategyInapplicable("PRUNE_CUBE: no index pair splits the members 4 + 4");

    const auto kb = apply_inference_rules(fam);
    const auto possible = possible_supports(fam, kb);
    for (const auto& u : possible)
        if (!fam.is_member(u) && members_inside(fam, u).size() != 2)
            throw CaseFailed("PRUNE_CUBE: possible support " + u.to_string() +
                             " is not a two-member union");

    // For each cycle: two adjacent edges cannot both be zero supports; the
    // checkable hypothesis is that the two unions plus the members inside
    // the 5-set cover all of its pairs, which makes the order-5 principal
    // submatrix irreducible while a size-4 support forces it PSD.
    auto check_cycle = [&](int keep, int drop) {
        std::vector<int> verts;
        for (int v = 0; v < gm.vertex_count(); ++v)
            if (fam.supports[static_cast<std::size_t>(v)].contains(keep)) verts.push_back(v);
        if (verts.size() != 4)
            throw StrategyInapplicable("PRUNE_CUBE: members containing index " +
                                       std::to_string(keep) + " do not number 4");
        const LabeledGraph cyc = gm.induced_subgraph(verts);
        if (!cyc.is_cycle_graph())
            throw StrategyInapplicable("PRUNE_CUBE: members containing index " +
                                       std::to_string(keep) + " do not induce a 4-cycle");
        const IndexSet five = IndexSet::full(fam.n).without(drop);
        for (int b = 0; b < cyc.vertex_count(); ++b) {
            const auto nbs = cyc.neighbors(b);
            const IndexSet sb = fam.supports[static_cast<std::size_t>(gm.index_of(cyc.label(b)))];
            const IndexSet sa = fam.supports[static_cast<std::size_t>(gm.index_of(cyc.label(nbs[0])))];
            const IndexSet sc = fam.supports[static_cast<std::size_t>(gm.index_of(cyc.label(nbs[1])))];
            const IndexSet u1 = sa.set_union(sb);
            const IndexSet u2 = sb.set_union(sc);
            if (!u1.subset_of(five) || !u2.subset_of(five))
                throw CaseFailed("PRUNE_CUBE: adjacent unions leave the 5-set " + five.to_string());
            std::set<std::pair<int, int>> covered;
            auto cover = [&](const IndexSet& s) {
                const auto idx = s.indices();
                for (std::size_t i = 0; i < idx.size(); ++i)
                    for (std::size_t j = i + 1; j < idx.size(); ++j)
                        covered.insert({idx[i], idx[j]});
            };
            cover(u1);
            cover(u2);
            for (const auto& m : fam.supports)
                if (m.subset_of(five)) cover(m);
            if (static_cast<int>(covered.size()) != (fam.n - 1) * (fam.n - 2) / 2)
                throw CaseFailed("PRUNE_CUBE: adjacent edges at member " + sb.to_string() +
                                 " do not cover every pair of " + five.to_string());
        }
        return cyc;
    };
    const LabeledGraph inner = check_cycle(hubs->first, hubs->second);
    const LabeledGraph outer = check_cycle(hubs->second, hubs->first);

    const int cross = gm.edge_count() - inner.edge_count() - outer.edge_count();
    const int usable = cross + 2 + 2;  // at most a matching survives in each 4-cycle
    BoundCertificate cert;
    cert.case_id = entry.id;
    cert.strategy = Strategy::PRUNE_CUBE;
    cert.bound = std::max(k, usable);
    cert.member_graph = gm;
    cert.derivation = {
        "the member graph is the cube: indices " + std::to_string(hubs->first) + " and " +
            std::to_string(hubs->second) + " split the members into two induced 4-cycles joined "
            "by " + std::to_string(cross) + " cross edges",
        "two adjacent edges of either 4-cycle cannot both be zero supports: their unions plus "
            "the members inside the corresponding 5-set cover all of its pairs, making the "
            "order-5 principal submatrix irreducible in every perturbation direction while a "
            "size-4 support forces it positive semidefinite",
        "so at most a matching (2 edges) of each 4-cycle carries columns: at most " +
            std::to_string(usable) + " member-graph edges are usable, and the cube is "
            "triangle-free, so the count is at most max(" + std::to_string(k) + ", " +
            std::to_string(usable) + ")",
        "bound = " + std::to_string(cert.bound),
    };
    append(cert.notes, kb.flags, "inference flag: ");
    return cert;
}

BoundCertificate make_prune(const Table1Entry& entry) {
    entry.family.validate();
    const auto& sup = entry.family.supports;
    const bool all_pairs = std::all_of(sup.begin(), sup.end(),
                                       [](const IndexSet& s) { return s.size() == 2; });
    const bool all_triples = std::all_of(sup.begin(), sup.end(),
                                         [](const IndexSet& s) { return s.size() == 3; });
    if (all_pairs && sup.size() == 7) return make_prune_horn(entry);
    if (all_triples && sup.size() == 8) {
        const LabeledGraph gm = graph_GM(entry.family);
        if (gm.is_triangle_free()) return make_prune_cube(entry);
        return make_prune_forest(entry);
    }
    throw StrategyInapplicable("PRUNE: no pruning pattern matches this family shape");
}

// ----- zero-diagonal patterns ------------------------------------------------

// Cyclically adjacent pair supports on {1..5}: {i, i+1} and {5, 1}.
bool cyclic_pair(const IndexSet& s) {
    if (s.size() != 2) return false;
    const auto v = s.indices();
    return v[1] == v[0] + 1 || (v[0] == 1 && v[1] == 5);
}

BoundCertificate make_cycle_pattern_bound() {
    const SymMatrix h = horn_matrix();
    const auto zs = zero_supports(h);
    const auto mz = minimal_zeros(h);
    if (mz.supports.size() != 5)
        throw CaseFailed("cycle pattern: expected five minimal zero supports");
    for (const auto& s : mz.supports)
        if (!cyclic_pair(s))
            throw CaseFailed("cycle pattern: minimal support " + s.to_string() +
                             " is not a cyclically adjacent pair");

    // Vertices: the five minimal supports plus the appended zero row/column
    // index; edges between intersecting supports (consecutive pairs) and
    // from the border to everything.  That is exactly the wheel on 6.
    LabeledGraph w;
    for (const auto& s : mz.supports) w.add_vertex(s.to_string());
    const int border = w.add_vertex("border");
    for (std::size_t i = 0; i < mz.supports.size(); ++i)
        for (std::size_t j = i + 1; j < mz.supports.size(); ++j)
            if (mz.supports[i].intersects(mz.supports[j]))
                w.add_edge(static_cast<int>(i), static_cast<int>(j));
    for (std::size_t i = 0; i < mz.supports.size(); ++i) w.add_edge(static_cast<int>(i), border);
    if (!w.minus_vertex(border).is_cycle_graph() || w.degree(border) != 5)
        throw CaseFailed("cycle pattern: the support graph plus border is not the wheel on 6");

    // Every zero support of the unbordered pattern spans at most two
    // consecutive minimal supports, so every column of a decomposition of a
    // bordered matrix touches a wheel edge or triangle.
    for (const auto& s : zs) {
        const auto inside = [&] {
            std::vector<IndexSet> v;
            for (const auto& m : mz.supports)
                if (m.subset_of(s)) v.push_back(m);
            return v;
        }();
        if (inside.empty())
            throw CaseFailed("cycle pattern: zero support " + s.to_string() + " holds no member");
        for (std::size_t i = 0; i < inside.size(); ++i)
            for (std::size_t j = i + 1; j < inside.size(); ++j)
                if (!w.has_edge(w.index_of(inside[i].to_string()), w.index_of(inside[j].to_string())))
                    throw CaseFailed("cycle pattern: supports inside " + s.to_string() +
                                     " are not adjacent in the wheel");
    }

    BoundCertificate cert;
    cert.case_id = 0;
    cert.strategy = Strategy::H_PLUS_0;
    cert.bound = cpr_wheel(6);
    cert.pruned_graph = w;
    cert.derivation = {
        "the order-5 cycle pattern has " + std::to_string(zs.size()) + " zero supports, each "
        "spanned by at most two cyclically adjacent minimal zeros",
        "bordering by a zero row adds one free index adjacent to everything, so decomposition "
        "columns factor through the wheel on 6 vertices",
        "wheel value: cpr_wheel(6) = " + std::to_string(cert.bound),
        "bound = " + std::to_string(cert.bound),
    };
    return cert;
}

BoundCertificate make_triples_pattern_bound() {
    SupportFamily fam;
    fam.n = 5;
    fam.supports = {IndexSet{1, 2, 3}, IndexSet{2, 3, 4}, IndexSet{3, 4, 5}, IndexSet{1, 4, 5},
                    IndexSet{1, 2, 5}};
    fam.validate();
    const LabeledGraph gm = graph_GM(fam);
    if (gm.edge_count() != 0)
        throw CaseFailed("triples pattern: some two members fit inside one zero support");

    LabeledGraph star;
    for (const auto& s : fam.supports) star.add_vertex(s.to_string());
    const int border = star.add_vertex("border");
    for (int i = 0; i < 5; ++i) star.add_edge(i, border);

    const CprBound rb = cpr_bound_rules(star);
    if (rb.uses_unsettled_fallback)
        throw CaseFailed("triples pattern: star bound rests on an unsettled constant");

    BoundCertificate cert;
    cert.case_id = 0;
    cert.strategy = Strategy::H_PLUS_0;
    cert.bound = rb.value;
    cert.member_graph = gm;
    cert.pruned_graph = star;
    cert.derivation = {
        "no union of two of the five size-3 supports fits within size n-2 = 3, so every zero "
        "support of the order-5 pattern is a single member and every zero a multiple of its "
        "minimal zero",
        "bordering by a zero row adds one free index, so decomposition columns factor through "
        "the star on 6 vertices",
    };
    append(cert.derivation, rb.derivation, "star: ");
    cert.derivation.push_back("bound = " + std::to_string(cert.bound));
    return cert;
}

}  // namespace

// ----- public operations -----------------------------------------------------

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::DD: return "DD";
        case Strategy::LOW_DEGREE: return "LOW_DEGREE";
        case Strategy::OMEGA_SPLIT: return "OMEGA_SPLIT";
        case Strategy::TF: return "TF";
        case Strategy::PRUNE_FOREST: return "PRUNE_FOREST";
        case Strategy::PRUNE_CUBE: return "PRUNE_CUBE";
        case Strategy::PRUNE_HORN: return "PRUNE_HORN";
        case Strategy::H_PLUS_0: return "H_PLUS_0";
    }
    return "UNKNOWN";
}

std::vector<Table1Entry> load_table1() {
    const std::size_t len = sizeof(kTable1Json) - 1;  // drop the terminating NUL
    if (fnv1a(kTable1Json, len) != kTable1Checksum)
        throw DataCorrupt("load_table1: embedded table failed its checksum");

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(std::string(kTable1Json, len));
    } catch (const nlohmann::json::exception& e) {
        throw DataCorrupt(std::string("load_table1: embedded table is not valid JSON: ") + e.what());
    }

    std::vector<Table1Entry> out;
    const int n = doc.at("n").get<int>();
    for (const auto& row : doc.at("cases")) {
        Table1Entry e;
        e.id = row.at("id").get<int>();
        e.family.n = n;
        for (const auto& s : row.at("supports")) e.family.supports.push_back(set_from_json(s));
        e.strategy = row.at("strategy").get<std::string>();
        if (row.contains("pivot")) e.pivot = set_from_json(row.at("pivot"));
        e.family.validate();
        out.push_back(std::move(e));
    }
    if (out.size() != 44)
        throw DataCorrupt("load_table1: expected 44 cases, found " + std::to_string(out.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].id != static_cast<int>(i) + 1)
            throw DataCorrupt("load_table1: case ids are not 1..44 in order");
    return out;
}

BoundCertificate strategy_dd(const Table1Entry& entry) { return make_dd(entry); }

BoundCertificate strategy_low_degree(const Table1Entry& entry, const IndexSet& pivot) {
    return make_low_degree(entry, pivot);
}

BoundCertificate strategy_omega_split(const Table1Entry& entry, const IndexSet& pivot) {
    return make_omega_split(entry, pivot);
}

BoundCertificate strategy_tf(const Table1Entry& entry) { return make_tf(entry); }

BoundCertificate strategy_prune(const Table1Entry& entry) { return make_prune(entry); }

ZeroDiagonalBounds lemma_h_plus_0() {
    ZeroDiagonalBounds out;
    out.cycle_pattern = make_cycle_pattern_bound();
    out.triples_pattern = make_triples_pattern_bound();
    return out;
}

// ----- re-verification --------------------------------------------------------

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw CaseFailed(what);
}

void reverify_dd(const BoundCertificate& cert, const Table1Entry& entry) {
    require(!find_crowded_set(entry.family).has_value(),
            "reverify DD: some 3- or 4-set contains three members");
    const auto kb = apply_inference_rules(entry.family);
    for (const auto& u : possible_supports(entry.family, kb))
        require(is_union_of_at_most_two(entry.family, u),
                "reverify DD: possible support " + u.to_string() + " is not a two-member union");
    const int k = static_cast<int>(entry.family.supports.size());
    require(cert.bound == std::max(k, (k * k) / 4), "reverify DD: bound mismatch");
}

void reverify_pivot(const BoundCertificate& cert, const Table1Entry& entry, bool low_degree) {
    const std::string who = low_degree ? "reverify LOW_DEGREE" : "reverify OMEGA_SPLIT";
    require(cert.pivot.has_value(), who + ": certificate lacks a pivot");
    const IndexSet pivot = *cert.pivot;
    require(entry.family.is_member(pivot), who + ": pivot is not a member");

    const auto kb = apply_inference_rules(entry.family);
    const LabeledGraph gv = graph_GV_over(entry.family, kb);
    require(cert.pruned_graph.has_value() && *cert.pruned_graph == gv,
            who + ": pruned member graph mismatch");
    const int pv = gv.index_of(pivot.to_string());
    const int deg = gv.degree(pv);
    require(deg == cert.pivot_degree, who + ": pivot degree mismatch");

    const auto possible = possible_supports(entry.family, kb);
    const auto over = supports_over_pivot(possible, pivot);
    require(over == cert.over_supports, who + ": supports over the pivot mismatch");

    int cap = 0;
    if (low_degree) {
        require(deg <= 2, who + ": pivot degree exceeds 2");
        for (const auto& u : over) {
            bool neighbor_union = false;
            for (int nb : gv.neighbors(pv))
                if (pivot.set_union(entry.family.supports[static_cast<std::size_t>(nb)]) == u)
                    neighbor_union = true;
            require(neighbor_union, who + ": over-support " + u.to_string() +
                                        " is not a single-neighbor union");
        }
        cap = std::max(deg, 1);
    } else {
        require(static_cast<int>(over.size()) <= 3, who + ": more than three over-supports");
        cap = std::max(static_cast<int>(over.size()), 1);
    }

    const CprBound order = max_cp_rank_order(static_cast<int>(entry.family.supports.size()) - 1);
    require(!order.uses_unsettled_fallback, who + ": order bound is unsettled");
    require(cert.bound == cap + order.value, who + ": bound mismatch");
    require(cert.remainder_graph.has_value() && *cert.remainder_graph == gv.minus_vertex(pv),
            who + ": remainder graph mismatch");
}

void reverify_tf(const BoundCertificate& cert, const Table1Entry& entry) {
    const auto kb = apply_inference_rules(entry.family);
    const auto possible = possible_supports(entry.family, kb);
    bool direct = true;
    for (const auto& u : possible)
        if (!is_union_of_at_most_two(entry.family, u)) direct = false;
    if (!direct) {
        int not_size3 = 0;
        for (const auto& s : entry.family.supports)
            if (s.size() != 3) ++not_size3;
        require(not_size3 <= 1, "reverify TF: neither the union-of-two predicate nor the size "
                                "pattern holds");
        bool flagged = false;
        for (const auto& note : cert.notes)
            if (note.rfind("FLAG:", 0) == 0) flagged = true;
        require(flagged, "reverify TF: weakened precondition without a flag note");
    }

    const LabeledGraph gm = graph_GM(entry.family);
    require(cert.member_graph.has_value() && *cert.member_graph == gm,
            "reverify TF: member graph mismatch");
    require(cert.tf.has_value(), "reverify TF: certificate lacks the tf witness");
    const LabeledGraph& wit = cert.tf->witness;
    require(wit.is_triangle_free(), "reverify TF: witness has a triangle");
    require(wit.edge_count() == cert.tf->value, "reverify TF: witness edge count mismatch");
    for (const auto& [a, b] : wit.labeled_edges())
        require(gm.has_edge(gm.index_of(a), gm.index_of(b)),
                "reverify TF: witness edge outside the member graph");
    require(tf_exact(gm).value == cert.tf->value, "reverify TF: tf value is not optimal");
    require(cert.bound == std::max(static_cast<int>(entry.family.supports.size()), cert.tf->value),
            "reverify TF: bound mismatch");
}

void reverify_prune_horn(const BoundCertificate& cert, const Table1Entry& entry) {
    require(cert.pivot.has_value(), "reverify PRUNE_HORN: certificate lacks a pivot");
    const auto kb = apply_inference_rules(entry.family);
    const auto square = find_rewrite_square(entry.family, kb);
    require(square.has_value(), "reverify PRUNE_HORN: no rewrite square");
    require(spanning_cycle_indices(entry.family).size() == 2,
            "reverify PRUNE_HORN: spanning cycle restrictions missing");

    LabeledGraph g2 = graph_GV_over(entry.family, kb);
    const int a = g2.index_of(square->dropped_pair.first.to_string());
    const int b = g2.index_of(square->dropped_pair.second.to_string());
    require(a >= 0 && b >= 0 && g2.has_edge(a, b), "reverify PRUNE_HORN: dropped edge missing");
    g2.remove_edge(a, b);
    require(cert.pruned_graph.has_value() && *cert.pruned_graph == g2,
            "reverify PRUNE_HORN: pruned graph mismatch");
    for (std::size_t i = 0; i < square->cycle_members.size(); ++i)
        for (std::size_t j = i + 1; j < square->cycle_members.size(); ++j) {
            const IndexSet& x = square->cycle_members[i];
            const IndexSet& y = square->cycle_members[j];
            if ((x == square->dropped_pair.first && y == square->dropped_pair.second) ||
                (y == square->dropped_pair.first && x == square->dropped_pair.second))
                continue;
            require(g2.has_edge(g2.index_of(x.to_string()), g2.index_of(y.to_string())),
                    "reverify PRUNE_HORN: square pair " + x.to_string() + ", " + y.to_string() +
                        " is missing from the pruned graph");
        }

    check_column_containment(entry.family, possible_supports(entry.family, kb), g2, square->square,
                             "reverify PRUNE_HORN");

    const int pv = g2.index_of(cert.pivot->to_string());
    require(pv >= 0 && g2.degree(pv) == cert.pivot_degree && cert.pivot_degree <= 2,
            "reverify PRUNE_HORN: pivot degree mismatch");
    const LabeledGraph remainder = g2.minus_vertex(pv);
    require(cert.remainder_graph.has_value() && *cert.remainder_graph == remainder,
            "reverify PRUNE_HORN: remainder mismatch");
    const CprBound rb = cpr_bound_rules(remainder);
    require(!rb.uses_unsettled_fallback, "reverify PRUNE_HORN: unsettled remainder bound");
    require(cert.bound == cert.pivot_degree + rb.value, "reverify PRUNE_HORN: bound mismatch");
}

void reverify_prune_forest(const BoundCertificate& cert, const Table1Entry& entry) {
    require(!cert.prune_sets.empty(), "reverify PRUNE_FOREST: no prune sets recorded");
    std::vector<std::pair<IndexSet, std::string>> extra;
    for (const auto& five : cert.prune_sets) {
        const auto banned = irreducibility_prune(entry.family, five);
        require(!banned.empty(), "reverify PRUNE_FOREST: pruning fails inside " + five.to_string());
        for (const auto& s : banned)
            extra.emplace_back(s, "irreducibility pruning inside " + five.to_string());
    }
    const auto merged = merge_exclusions(apply_inference_rules(entry.family), extra);
    const LabeledGraph gv = graph_GV_over(entry.family, merged);
    require(cert.pruned_graph.has_value() && *cert.pruned_graph == gv,
            "reverify PRUNE_FOREST: pruned graph mismatch");
    require(gv.is_forest(), "reverify PRUNE_FOREST: pruned graph is not a forest");
    check_column_containment(entry.family, possible_supports(entry.family, merged), gv, std::nullopt,
                             "reverify PRUNE_FOREST");
    const CprBound rb = cpr_bound_rules(gv);
    require(!rb.uses_unsettled_fallback, "reverify PRUNE_FOREST: unsettled forest bound");
    require(cert.bound == rb.value, "reverify PRUNE_FOREST: bound mismatch");
}

void reverify_prune_cube(const BoundCertificate& cert, const Table1Entry& entry) {
    // The construction is deterministic, so re-deriving it and comparing the
    // certificate's graph and bound re-checks every step.
    const BoundCertificate again = make_prune_cube(entry);
    require(cert.member_graph.has_value() && again.member_graph.has_value() &&
                *cert.member_graph == *again.member_graph,
            "reverify PRUNE_CUBE: member graph mismatch");
    require(cert.bound == again.bound, "reverify PRUNE_CUBE: bound mismatch");
}

}  // namespace

void reverify(const BoundCertificate& cert, const Table1Entry& entry) {
    require(cert.case_id == entry.id, "reverify: certificate and entry disagree on the case id");
    require(!cert.uses_unsettled_fallback, "reverify: certificate leans on an unsettled constant");
    entry.family.validate();
    switch (cert.strategy) {
        case Strategy::DD: reverify_dd(cert, entry); return;
        case Strategy::LOW_DEGREE: reverify_pivot(cert, entry, true); return;
        case Strategy::OMEGA_SPLIT: reverify_pivot(cert, entry, false); return;
        case Strategy::TF: reverify_tf(cert, entry); return;
        case Strategy::PRUNE_HORN: reverify_prune_horn(cert, entry); return;
        case Strategy::PRUNE_FOREST: reverify_prune_forest(cert, entry); return;
        case Strategy::PRUNE_CUBE: reverify_prune_cube(cert, entry); return;
        case Strategy::H_PLUS_0: break;
    }
    throw CaseFailed("reverify: H_PLUS_0 certificates go through reverify_zero_diagonal");
}

void reverify_zero_diagonal(const ZeroDiagonalBounds& bounds) {
    const BoundCertificate cycle = make_cycle_pattern_bound();
    require(bounds.cycle_pattern.bound == cycle.bound && cycle.bound == cpr_wheel(6),
            "reverify zero-diagonal: cycle pattern bound mismatch");
    const BoundCertificate triples = make_triples_pattern_bound();
    require(bounds.triples_pattern.bound == triples.bound,
            "reverify zero-diagonal: triples pattern bound mismatch");
    require(bounds.cycle_pattern.strategy == Strategy::H_PLUS_0 &&
                bounds.triples_pattern.strategy == Strategy::H_PLUS_0,
            "reverify zero-diagonal: wrong strategy tag");
}

// ----- figures and the full run ------------------------------------------------

std::vector<FigureGraph> figure_graphs() {
    const auto table = load_table1();
    auto family_of = [&](int id) -> const SupportFamily& {
        return table[static_cast<std::size_t>(id - 1)].family;
    };

    std::vector<FigureGraph> figs;
    figs.push_back({"fig01", 5, graph_GM(family_of(5)), 8, "member graph"});

    {
        // The case-36 drawing shows the member graph after pruning and the
        // rank-1 rewrite, not the raw member graph (which is complete).
        const auto& fam = family_of(36);
        const auto kb = apply_inference_rules(fam);
        LabeledGraph g2 = graph_GV_over(fam, kb);
        const auto square = find_rewrite_square(fam, kb);
        if (!square) throw CaseFailed("fig02: the case-36 rewrite square vanished");
        g2.remove_edge(g2.index_of(square->dropped_pair.first.to_string()),
                       g2.index_of(square->dropped_pair.second.to_string()));
        figs.push_back({"fig02", 36, g2, std::nullopt,
                        "pruned member graph after the rank-1 rewrite (the raw member graph is "
                        "complete on 7 vertices)"});
    }

    figs.push_back({"fig03", 37, graph_GM(family_of(37)), 9, "member graph"});

    {
        LabeledGraph g = graph_GM(family_of(38));
        g.remove_edge(g.index_of("{1,3,5}"), g.index_of("{3,5,6}"));
        figs.push_back({"fig04", 38, g, 8,
                        "drawn without the member-graph edge {1,3,5}-{3,5,6}; the bound for case "
                        "38 uses the full member graph"});
    }

    figs.push_back({"fig05", 39, graph_GM(family_of(39)), 8, "member graph"});
    figs.push_back({"fig06", 40, graph_GM(family_of(40)), 8, "member graph"});
    figs.push_back({"fig07", 41, graph_GM(family_of(41)), 7, "member graph"});
    figs.push_back({"fig08", 42, graph_GM(family_of(42)), 7, "member graph"});
    figs.push_back({"fig09", 43, graph_GM(family_of(43)), std::nullopt, "member graph"});

    {
        const BoundCertificate cert = make_prune_forest(table[42]);
        if (!cert.pruned_graph) throw CaseFailed("fig10: the case-43 forest vanished");
        figs.push_back({"fig10", 43, *cert.pruned_graph, std::nullopt,
                        "member graph after irreducibility pruning (a forest)"});
    }

    figs.push_back({"fig11", 44, graph_GM(family_of(44)), std::nullopt, "member graph (the cube)"});
    return figs;
}

BoundCertificate certify_case(const Table1Entry& entry) {
    BoundCertificate cert;
    try {
        if (entry.strategy == "DD") cert = strategy_dd(entry);
        else if (entry.strategy == "LOW_DEGREE") cert = strategy_low_degree(entry, *entry.pivot);
        else if (entry.strategy == "OMEGA_SPLIT") cert = strategy_omega_split(entry, *entry.pivot);
        else if (entry.strategy == "TF") cert = strategy_tf(entry);
        else if (entry.strategy == "PRUNE") cert = strategy_prune(entry);
        else throw CaseFailed("case " + std::to_string(entry.id) + ": unknown strategy " + entry.strategy);
    } catch (const StrategyInapplicable& e) {
        throw CaseFailed("case " + std::to_string(entry.id) + ": assigned strategy failed: " + e.what());
    }
    if (cert.bound > 9)
        throw CaseFailed("case " + std::to_string(entry.id) + ": bound " +
                         std::to_string(cert.bound) + " exceeds 9");
    reverify(cert, entry);
    return cert;
}

TheoremReport verify_theorem_main(int jobs) {
    const auto table = load_table1();
    TheoremReport report;

    report.certificates.resize(table.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < table.size(); ++i)
            report.certificates[i] = certify_case(table[i]);
    } else {
        std::vector<std::exception_ptr> errors(table.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= table.size()) return;
                try {
                    report.certificates[i] = certify_case(table[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        const int count = std::min<int>(jobs, static_cast<int>(table.size()));
        pool.reserve(static_cast<std::size_t>(count));
        for (int t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    report.zero_diagonal = lemma_h_plus_0();
    reverify_zero_diagonal(report.zero_diagonal);

    report.max_bound = 0;
    for (const auto& c : report.certificates) report.max_bound = std::max(report.max_bound, c.bound);

    bool any_unsettled = false;
    for (const auto& c : report.certificates) any_unsettled |= c.uses_unsettled_fallback;
    any_unsettled |= report.zero_diagonal.cycle_pattern.uses_unsettled_fallback;
    any_unsettled |= report.zero_diagonal.triples_pattern.uses_unsettled_fallback;
    if (any_unsettled) throw CaseFailed("constant audit: a certificate leans on an unsettled constant");
    report.audit.push_back("no certificate rests on an unsettled order constant");
    report.audit.push_back("largest certified bound over the 44 cases: " +
                           std::to_string(report.max_bound));
    report.audit.push_back("zero-diagonal patterns: " +
                           std::to_string(report.zero_diagonal.cycle_pattern.bound) + " (cycle), " +
                           std::to_string(report.zero_diagonal.triples_pattern.bound) + " (triples)");

    for (const auto& fig : figure_graphs()) {
        FigureComparison cmp;
        cmp.name = fig.name;
        cmp.case_id = fig.case_id;
        cmp.expected_tf = fig.expected_tf;
        cmp.note = fig.note;
        if (fig.graph.edge_count() <= 20) cmp.drawing_tf = tf_exact(fig.graph).value;
        const LabeledGraph gm = graph_GM(table[static_cast<std::size_t>(fig.case_id - 1)].family);
        if (gm.edge_count() <= 20) cmp.definitional_tf = tf_exact(gm).value;
        if (cmp.expected_tf && cmp.drawing_tf != cmp.expected_tf)
            throw CaseFailed(fig.name + ": drawn graph has tf " +
                             std::to_string(cmp.drawing_tf.value_or(-1)) + ", caption says " +
                             std::to_string(*cmp.expected_tf));
        report.figures.push_back(std::move(cmp));
    }

    for (const auto& entry : table) {
        std::vector<std::string> others;
        if (entry.strategy != "DD") {
            try {
                others.push_back("DD (bound " + std::to_string(strategy_dd(entry).bound) + ")");
            } catch (const StrategyInapplicable&) {
            }
        }
        if (entry.strategy != "TF") {
            try {
                others.push_back("TF (bound " + std::to_string(strategy_tf(entry).bound) + ")");
            } catch (const StrategyInapplicable&) {
            } catch (const TooLarge&) {
            }
        }
        if (!others.empty()) {
            std::string line = "case " + std::to_string(entry.id) + ": assigned " + entry.strategy +
                               "; also applicable: ";
            for (std::size_t i = 0; i < others.size(); ++i) {
                if (i) line += ", ";
                line += others[i];
            }
            report.also_applicable.push_back(std::move(line));
        }
    }

    const CprBound k33 = cpr_bound_rules(LabeledGraph::complete_bipartite(3, 3));
    report.closing_statement =
        "Certified: every 6x6 completely positive matrix orthogonal to an exceptional extremal "
        "copositive matrix has cp-rank at most 9 (each of the 44 positive-diagonal support "
        "families yields a bound of at most 9; the zero-diagonal patterns yield 7 and 6).  A "
        "nonsingular boundary matrix that is orthogonal to no exceptional extremal must be "
        "orthogonal to a nonnegative extremal and so has an off-diagonal zero entry; combined "
        "with the known fact that the maximal order-6 cp-rank is attained at a nonsingular "
        "boundary matrix, the maximum is attained at a nonsingular matrix with a zero entry.  "
        "The complete bipartite graph on 3+3 vertices already realizes cp-rank " +
        std::to_string(k33.value) +
        ", so the certified bound is tight on that class.  Whether the overall maximum exceeds 9 "
        "is not decided by these certificates.";
    return report;
}

}  // namespace copos

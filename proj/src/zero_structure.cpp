#include "copos/zero_structure.hpp"

#include "copos/exceptions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace copos {

void SupportFamily::validate() const {
    if (n < 2) throw InconsistentFamily("support family: dimension must be at least 2");
    for (const auto& s : supports) {
        if (s.size() < 2) {
            throw InconsistentFamily("support family: member " + s.to_string() + " has size < 2");
        }
        if (s.size() > n - 2) {
            throw InconsistentFamily("support family: member " + s.to_string() +
                                     " exceeds the maximum zero-support size " + std::to_string(n - 2));
        }
        for (int i : s) {
            if (i > n) {
                throw InconsistentFamily("support family: member " + s.to_string() + " exceeds index " +
                                         std::to_string(n));
            }
        }
    }
    for (std::size_t i = 0; i < supports.size(); ++i) {
        for (std::size_t j = i + 1; j < supports.size(); ++j) {
            if (supports[i] == supports[j]) {
                throw InconsistentFamily("support family: duplicate member " + supports[i].to_string());
            }
            if (supports[i].subset_of(supports[j]) || supports[j].subset_of(supports[i])) {
                throw InconsistentFamily("support family: member " + supports[i].to_string() +
                                         " is nested with " + supports[j].to_string() +
                                         ", contradicting minimality");
            }
        }
    }
}

bool SupportFamily::is_member(const IndexSet& s) const {
    return std::find(supports.begin(), supports.end(), s) != supports.end();
}

namespace {

class KnowledgeBuilder {
public:
    explicit KnowledgeBuilder(int n) { k_.n = n; }

    bool confirm(const IndexSet& s, const std::string& why) {
        if (auto it = k_.excluded.find(s); it != k_.excluded.end()) {
            throw InconsistentFamily("set " + s.to_string() + " confirmed (" + why +
                                     ") but already excluded (" + it->second + ")");
        }
        return k_.confirmed.emplace(s, why).second;
    }

    bool exclude(const IndexSet& s, const std::string& why) {
        if (auto it = k_.confirmed.find(s); it != k_.confirmed.end()) {
            throw InconsistentFamily("set " + s.to_string() + " excluded (" + why +
                                     ") but already confirmed (" + it->second + ")");
        }
        return k_.excluded.emplace(s, why).second;
    }

    void flag(std::string message) { k_.flags.push_back(std::move(message)); }

    const ZeroSupportKnowledge& get() const { return k_; }
    ZeroSupportKnowledge take() { return std::move(k_); }

private:
    ZeroSupportKnowledge k_;
};

// Graph on the elements of sigma whose edges are the size-2 family members
// contained in sigma.  With unit diagonal this is exactly the -1 pattern of
// the principal submatrix on sigma.
LabeledGraph internal_pair_graph(const SupportFamily& family, const IndexSet& sigma) {
    std::vector<std::string> labels;
    for (int i : sigma) labels.push_back(std::to_string(i));
    LabeledGraph g(labels);
    for (const auto& member : family.supports) {
        if (member.size() == 2 && member.subset_of(sigma)) {
            g.add_edge(std::to_string(member.indices()[0]), std::to_string(member.indices()[1]));
        }
    }
    return g;
}

std::vector<IndexSet> subsets_of_size(int n, int size) {
    std::vector<IndexSet> out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        if (std::popcount(mask) == size) out.push_back(IndexSet::from_mask(mask));
    }
    return out;
}

}  // namespace

ZeroSupportKnowledge apply_inference_rules(const SupportFamily& family) {
    family.validate();
    const int n = family.n;
    if (n > 12) {
        throw DimensionTooLarge("apply_inference_rules: n = " + std::to_string(n) + " (cap 12)");
    }
    const int max_size = n - 2;
    KnowledgeBuilder kb(n);

    // Seed: members are zero supports; proper subsets of a member cannot be
    // (a zero support strictly inside one would contradict its minimality).
    for (const auto& member : family.supports) {
        kb.confirm(member, "minimal support (family member)");
    }
    for (const auto& member : family.supports) {
        const auto& idx = member.indices();
        const int m = member.size();
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
            const int bits = std::popcount(mask);
            if (bits < 2 || bits == m) continue;
            std::vector<int> sub;
            for (int b = 0; b < m; ++b) {
                if (mask & (std::uint32_t{1} << b)) sub.push_back(idx[static_cast<std::size_t>(b)]);
            }
            kb.exclude(IndexSet(std::move(sub)),
                       "proper subset of minimal support " + member.to_string());
        }
    }

    // R1: size-2 members sharing one index.
    for (std::size_t i = 0; i < family.supports.size(); ++i) {
        for (std::size_t j = i + 1; j < family.supports.size(); ++j) {
            const IndexSet& a = family.supports[i];
            const IndexSet& b = family.supports[j];
            if (a.size() != 2 || b.size() != 2) continue;
            if (a.set_intersection(b).size() != 1) continue;
            const std::string pair_text = a.to_string() + ", " + b.to_string();
            kb.confirm(a.set_union(b), "R1: union of intersecting pair supports " + pair_text);
            const IndexSet sym_diff = a.set_union(b).set_difference(a.set_intersection(b));
            kb.exclude(sym_diff, "R1: symmetric difference of pair supports " + pair_text);
        }
    }

    // R2: three pairwise-intersecting size-2 members.
    for (std::size_t i = 0; i < family.supports.size(); ++i) {
        for (std::size_t j = i + 1; j < family.supports.size(); ++j) {
            for (std::size_t l = j + 1; l < family.supports.size(); ++l) {
                const IndexSet& a = family.supports[i];
                const IndexSet& b = family.supports[j];
                const IndexSet& c = family.supports[l];
                if (a.size() != 2 || b.size() != 2 || c.size() != 2) continue;
                if (!a.intersects(b) || !a.intersects(c) || !b.intersects(c)) continue;
                const IndexSet u = a.set_union(b).set_union(c);
                if (u.size() != 4) continue;  // a shared-triangle case is resolved by R1
                const std::string why = "R2: union of pairwise-intersecting pair supports " +
                                        a.to_string() + ", " + b.to_string() + ", " + c.to_string();
                if (u.size() > max_size) {
                    kb.flag(why + " has size " + std::to_string(u.size()) +
                            " > " + std::to_string(max_size) + ": family unrealizable");
                } else {
                    kb.confirm(u, why);
                }
            }
        }
    }

    // R4: a size-4 candidate containing a size-3 member must be the union of
    // exactly two members.  (Size-4 sets are candidates only when n >= 6.)
    if (max_size >= 4) {
        for (const auto& sigma : subsets_of_size(n, 4)) {
            std::vector<const IndexSet*> inside;
            bool has_size3 = false;
            for (const auto& member : family.supports) {
                if (member.subset_of(sigma)) {
                    inside.push_back(&member);
                    if (member.size() == 3) has_size3 = true;
                }
            }
            if (!has_size3) continue;
            const bool exactly_two_and_covering =
                inside.size() == 2 && inside[0]->set_union(*inside[1]) == sigma;
            if (!exactly_two_and_covering) {
                kb.exclude(sigma,
                           "R4: contains a size-3 member but is not the union of exactly two members");
            }
        }
    }

    // R5: a candidate with >= 3 internal members must be a size-4 set whose
    // internal members are size-2 pairs forming K_{1,3} or K_{2,2}.
    for (int size = 3; size <= max_size; ++size) {
        for (const auto& sigma : subsets_of_size(n, size)) {
            if (family.is_member(sigma)) continue;
            std::vector<const IndexSet*> inside;
            for (const auto& member : family.supports) {
                if (member.subset_of(sigma)) inside.push_back(&member);
            }
            if (inside.size() < 3) continue;
            bool all_pairs = true;
            for (const auto* m : inside) all_pairs = all_pairs && m->size() == 2;
            bool ok = false;
            if (sigma.size() == 4 && all_pairs) {
                const LabeledGraph t = internal_pair_graph(family, sigma);
                ok = t.is_connected() && t.complete_bipartite_parts().has_value();
            }
            if (!ok) {
                kb.exclude(sigma, "R5: contains " + std::to_string(inside.size()) +
                                      " members not forming a complete bipartite pair pattern");
            }
        }
    }

    // R6: size-4 candidate with connected spanning internal pair graph; the
    // graph equals the -1 pattern of the principal submatrix, which for a
    // zero support must be complete bipartite.  Complete bipartite patterns
    // conversely force the remaining entries to +1 and produce a zero (the
    // two halves of K_{2,2} are disjoint members whose minimal zeros add).
    if (max_size >= 4) {
        for (const auto& sigma : subsets_of_size(n, 4)) {
            const LabeledGraph t = internal_pair_graph(family, sigma);
            if (t.edge_count() == 0 || !t.is_connected()) continue;
            if (t.complete_bipartite_parts().has_value()) {
                kb.confirm(sigma, "R6: internal pair supports form complete bipartite " +
                                      std::string(t.edge_count() == 4 ? "K_{2,2}" : "K_{1,3}"));
            } else {
                kb.exclude(sigma, "R6: internal pair supports form a connected spanning graph "
                                  "that is not complete bipartite");
            }
        }
    }

    // R7: size-4 candidate whose only internal members are two disjoint pair
    // supports.  A zero with full support sigma would force the principal
    // submatrix on sigma to be positive semidefinite; with unit diagonal the
    // two -1 entries force the Gram vectors into two antipodal pairs, so the
    // four cross entries are +c, -c, -c, +c for a single c.  A cross pair
    // arising as the symmetric difference of two intersecting pair members
    // has its entry pinned to exactly 1 (the 3x3 principal submatrix is SPN,
    // even -1-distance forces >= 1, extremality forces = 1), so c = 1 in
    // magnitude and some other cross pair has entry -1 -- a size-2 zero
    // support missing from the family.  Hence sigma is not a zero support.
    if (max_size >= 4) {
        std::vector<IndexSet> unit_pairs;  // cross pairs with entry pinned to 1
        for (std::size_t i = 0; i < family.supports.size(); ++i) {
            for (std::size_t j = i + 1; j < family.supports.size(); ++j) {
                const IndexSet& a = family.supports[i];
                const IndexSet& b = family.supports[j];
                if (a.size() != 2 || b.size() != 2) continue;
                if (a.set_intersection(b).size() != 1) continue;
                unit_pairs.push_back(a.set_union(b).set_difference(a.set_intersection(b)));
            }
        }
        for (std::size_t i = 0; i < family.supports.size(); ++i) {
            for (std::size_t j = i + 1; j < family.supports.size(); ++j) {
                const IndexSet& a = family.supports[i];
                const IndexSet& b = family.supports[j];
                if (a.size() != 2 || b.size() != 2 || a.intersects(b)) continue;
                const IndexSet sigma = a.set_union(b);
                int inside = 0;
                for (const auto& member : family.supports) {
                    if (member.subset_of(sigma)) ++inside;
                }
                if (inside != 2) continue;
                for (int p : a) {
                    for (int q : b) {
                        const IndexSet cross{p, q};
                        if (std::find(unit_pairs.begin(), unit_pairs.end(), cross) !=
                            unit_pairs.end()) {
                            kb.exclude(sigma, "R7: disjoint pair supports " + a.to_string() +
                                                  ", " + b.to_string() + " with cross pair " +
                                                  cross.to_string() +
                                                  " pinned to entry 1 admit no PSD pattern");
                        }
                    }
                }
            }
        }
    }

    // R3 (to fixed point): three members whose pairwise unions are all
    // confirmed give a confirmed triple union.  Only R3 consumes knowledge,
    // so iterating it alone reaches the closure of all seven rules.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < family.supports.size(); ++i) {
            for (std::size_t j = i + 1; j < family.supports.size(); ++j) {
                for (std::size_t l = j + 1; l < family.supports.size(); ++l) {
                    const IndexSet& a = family.supports[i];
                    const IndexSet& b = family.supports[j];
                    const IndexSet& c = family.supports[l];
                    const auto& k = kb.get();
                    if (!k.is_confirmed(a.set_union(b)) || !k.is_confirmed(a.set_union(c)) ||
                        !k.is_confirmed(b.set_union(c))) {
                        continue;
                    }
                    const IndexSet u = a.set_union(b).set_union(c);
                    if (k.is_confirmed(u)) continue;
                    const std::string why = "R3: triple union of " + a.to_string() + ", " +
                                            b.to_string() + ", " + c.to_string() +
                                            " with confirmed pairwise unions";
                    if (u.size() > max_size) {
                        const std::string msg = why + " has size " + std::to_string(u.size()) +
                                                " > " + std::to_string(max_size) +
                                                ": family unrealizable";
                        const auto& fl = kb.get().flags;
                        if (std::find(fl.begin(), fl.end(), msg) == fl.end()) kb.flag(msg);
                    } else {
                        kb.confirm(u, why);
                        changed = true;
                    }
                }
            }
        }
    }

    return kb.take();
}

LabeledGraph graph_GM(const SupportFamily& family) {
    family.validate();
    std::vector<std::string> labels;
    for (const auto& s : family.supports) labels.push_back(s.to_string());
    LabeledGraph g(labels);
    const int max_size = family.n - 2;
    for (std::size_t i = 0; i < family.supports.size(); ++i) {
        for (std::size_t j = i + 1; j < family.supports.size(); ++j) {
            if (family.supports[i].set_union(family.supports[j]).size() <= max_size) {
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return g;
}

LabeledGraph graph_GV_over(const SupportFamily& family, const ZeroSupportKnowledge& knowledge) {
    LabeledGraph g = graph_GM(family);
    for (std::size_t i = 0; i < family.supports.size(); ++i) {
        for (std::size_t j = i + 1; j < family.supports.size(); ++j) {
            if (!g.has_edge(static_cast<int>(i), static_cast<int>(j))) continue;
            if (knowledge.is_excluded(family.supports[i].set_union(family.supports[j]))) {
                g.remove_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return g;
}

TfResult tf_exact(const LabeledGraph& g) {
    if (g.edge_count() > 20) {
        throw TooLarge("tf_exact: " + std::to_string(g.edge_count()) + " edges (cap 20)");
    }
    const MaxTriangleFree opt = max_triangle_free_subgraph(g);
    TfResult result;
    result.value = opt.value;
    std::vector<std::string> labels;
    for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
    result.witness = LabeledGraph(labels);
    for (const auto& e : opt.kept) result.witness.add_edge(e.first, e.second);
    if (!result.witness.is_triangle_free() || result.witness.edge_count() != result.value) {
        throw std::logic_error("tf_exact: witness failed re-verification");
    }
    return result;
}

std::vector<IndexSet> irreducibility_prune(const SupportFamily& family, const IndexSet& five_subset) {
    family.validate();
    if (five_subset.size() != 5) {
        throw BadInput("irreducibility_prune: subset " + five_subset.to_string() + " must have size 5");
    }
    // Every pair inside the subset must be covered by a member lying inside
    // the subset, so the member's minimal zero restricts to a zero of the
    // principal submatrix witnessing irreducibility in that direction.
    const auto& idx = five_subset.indices();
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            const IndexSet pair{idx[a], idx[b]};
            bool covered = false;
            for (const auto& member : family.supports) {
                if (pair.subset_of(member) && member.subset_of(five_subset)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return {};
        }
    }
    std::vector<IndexSet> out;
    for (int drop : idx) out.push_back(five_subset.without(drop));
    return out;
}

}  // namespace copos

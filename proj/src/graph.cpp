#include "copos/graph.hpp"

#include "copos/exceptions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <queue>

namespace copos {

LabeledGraph::LabeledGraph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second) {
            throw BadInput("LabeledGraph: duplicate vertex label \"" + l + "\"");
        }
    }
}

namespace {
std::vector<std::string> numeric_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return labels;
}
}  // namespace

LabeledGraph LabeledGraph::complete(int n) {
    LabeledGraph g(numeric_labels(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    return g;
}

LabeledGraph LabeledGraph::cycle(int n) {
    if (n < 3) {
        throw BadInput("LabeledGraph::cycle: need at least 3 vertices");
    }
    LabeledGraph g(numeric_labels(n));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

LabeledGraph LabeledGraph::path(int n) {
    LabeledGraph g(numeric_labels(n));
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

LabeledGraph LabeledGraph::wheel(int n) {
    if (n < 4) {
        throw BadInput("LabeledGraph::wheel: need at least 4 vertices");
    }
    LabeledGraph g(numeric_labels(n));
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    for (int i = 1; i < n; ++i) {
        int next = (i % (n - 1)) + 1;
        g.add_edge(i, next);
    }
    return g;
}

LabeledGraph LabeledGraph::complete_bipartite(int a, int b) {
    LabeledGraph g(numeric_labels(a + b));
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    }
    return g;
}

int LabeledGraph::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return static_cast<int>(i);
    }
    return -1;
}

int LabeledGraph::add_vertex(const std::string& label) {
    if (index_of(label) >= 0) {
        throw BadInput("LabeledGraph: duplicate vertex label \"" + label + "\"");
    }
    labels_.push_back(label);
    return vertex_count() - 1;
}

void LabeledGraph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) {
        throw BadInput("LabeledGraph: vertex index " + std::to_string(v) + " out of range");
    }
}

void LabeledGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw BadInput("LabeledGraph: loop at vertex " + labels_[static_cast<std::size_t>(u)]);
    }
    edges_.insert({std::min(u, v), std::max(u, v)});
}

void LabeledGraph::add_edge(const std::string& u, const std::string& v) {
    int ui = index_of(u);
    int vi = index_of(v);
    if (ui < 0) ui = add_vertex(u);
    if (vi < 0) vi = add_vertex(v);
    add_edge(ui, vi);
}

void LabeledGraph::remove_edge(int u, int v) {
    edges_.erase({std::min(u, v), std::max(u, v)});
}

bool LabeledGraph::has_edge(int u, int v) const {
    if (u == v) return false;
    return edges_.count({std::min(u, v), std::max(u, v)}) > 0;
}

std::vector<std::pair<std::string, std::string>> LabeledGraph::labeled_edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(edges_.size());
    for (const auto& [u, v] : edges_) {
        out.emplace_back(labels_[static_cast<std::size_t>(u)], labels_[static_cast<std::size_t>(v)]);
    }
    return out;
}

int LabeledGraph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (const auto& [a, b] : edges_) {
        if (a == v || b == v) ++d;
    }
    return d;
}

std::vector<int> LabeledGraph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (const auto& [a, b] : edges_) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

LabeledGraph LabeledGraph::induced_subgraph(const std::vector<int>& vertices) const {
    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    for (int v : vertices) {
        check_vertex(v);
        labels.push_back(labels_[static_cast<std::size_t>(v)]);
    }
    LabeledGraph g(std::move(labels));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (has_edge(vertices[i], vertices[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return g;
}

LabeledGraph LabeledGraph::minus_vertex(int v) const {
    check_vertex(v);
    std::vector<int> keep;
    for (int i = 0; i < vertex_count(); ++i) {
        if (i != v) keep.push_back(i);
    }
    return induced_subgraph(keep);
}

std::vector<std::vector<int>> LabeledGraph::connected_components() const {
    const int n = vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> components;
    for (int start = 0; start < n; ++start) {
        if (comp[static_cast<std::size_t>(start)] >= 0) continue;
        const int id = static_cast<int>(components.size());
        components.emplace_back();
        std::queue<int> q;
        q.push(start);
        comp[static_cast<std::size_t>(start)] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            components.back().push_back(v);
            for (int w : neighbors(v)) {
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    q.push(w);
                }
            }
        }
        std::sort(components.back().begin(), components.back().end());
    }
    return components;
}

bool LabeledGraph::is_connected() const {
    return vertex_count() <= 1 || connected_components().size() == 1;
}

std::vector<std::array<int, 3>> LabeledGraph::triangles() const {
    std::vector<std::array<int, 3>> out;
    const int n = vertex_count();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!has_edge(i, j)) continue;
            for (int k = j + 1; k < n; ++k) {
                if (has_edge(i, k) && has_edge(j, k)) out.push_back({i, j, k});
            }
        }
    }
    return out;
}

bool LabeledGraph::is_triangle_free() const {
    return triangles().empty();
}

bool LabeledGraph::is_forest() const {
    // A graph is a forest iff |E| = |V| - #components.
    return edge_count() == vertex_count() - static_cast<int>(connected_components().size());
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> LabeledGraph::bipartition() const {
    const int n = vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (color[static_cast<std::size_t>(start)] >= 0) continue;
        color[static_cast<std::size_t>(start)] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : neighbors(v)) {
                if (color[static_cast<std::size_t>(w)] < 0) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    q.push(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < n; ++v) {
        (color[static_cast<std::size_t>(v)] == 0 ? parts.first : parts.second).push_back(v);
    }
    return parts;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> LabeledGraph::complete_bipartite_parts() const {
    if (edge_count() == 0 || !is_connected()) return std::nullopt;
    auto parts = bipartition();
    if (!parts) return std::nullopt;
    const auto& [x, y] = *parts;
    if (static_cast<int>(x.size() * y.size()) != edge_count()) return std::nullopt;
    for (int u : x) {
        for (int v : y) {
            if (!has_edge(u, v)) return std::nullopt;
        }
    }
    return parts;
}

bool LabeledGraph::is_disjoint_union_of_paths() const {
    if (!is_forest()) return false;
    for (int v = 0; v < vertex_count(); ++v) {
        if (degree(v) > 2) return false;
    }
    return true;
}

bool LabeledGraph::is_cycle_graph() const {
    const int n = vertex_count();
    if (n < 3 || edge_count() != n || !is_connected()) return false;
    for (int v = 0; v < n; ++v) {
        if (degree(v) != 2) return false;
    }
    return true;
}

bool has_minor(const LabeledGraph& g, const LabeledGraph& h) {
    const int n = g.vertex_count();
    const int k = h.vertex_count();
    if (k == 0) return true;
    if (n > 12) {
        throw DimensionTooLarge("has_minor: host graph has " + std::to_string(n) + " vertices (cap 12)");
    }
    if (n < k || g.edge_count() < h.edge_count()) return false;

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= 1u << v;
        adj[static_cast<std::size_t>(v)] |= 1u << u;
    }
    auto set_connected = [&](std::uint32_t set) {
        if (set == 0) return false;
        std::uint32_t start = set & (~set + 1);
        std::uint32_t reached = start;
        std::uint32_t frontier = start;
        while (frontier) {
            std::uint32_t next = 0;
            std::uint32_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj[static_cast<std::size_t>(v)] & set;
            }
            next &= ~reached;
            reached |= next;
            frontier = next;
        }
        return reached == set;
    };
    auto sets_joined = [&](std::uint32_t a, std::uint32_t b) {
        std::uint32_t s = a;
        while (s) {
            int v = std::countr_zero(s);
            s &= s - 1;
            if (adj[static_cast<std::size_t>(v)] & b) return true;
        }
        return false;
    };

    const auto h_edges = std::vector<std::pair<int, int>>(h.edges().begin(), h.edges().end());

    // Assign each host vertex to branch set 0 (unused) or 1..k, depth-first:
    // once all host vertices are placed, every branch set must be nonempty and
    // connected, and every edge of h must join its branch sets. No
    // symmetry-breaking across sets — h's vertices are not interchangeable in
    // general (branch sets are tied to specific h-vertices).
    std::vector<std::uint32_t> sets(static_cast<std::size_t>(k + 1), 0);

    auto feasible = [&]() {
        for (int c = 1; c <= k; ++c) {
            if (!set_connected(sets[static_cast<std::size_t>(c)])) return false;
        }
        for (const auto& [x, y] : h_edges) {
            if (!sets_joined(sets[static_cast<std::size_t>(x + 1)], sets[static_cast<std::size_t>(y + 1)])) {
                return false;
            }
        }
        return true;
    };

    // Depth-first over (k+1)^n assignments; n <= 12 and k <= 5 keep this
    // bounded, and the remaining-vertices prune cuts the space.
    std::function<bool(int, int)> place = [&](int v, int used) -> bool {
        if (k - used > n - v) return false;  // not enough vertices left to fill empty sets
        if (v == n) return feasible();
        for (int c = 0; c <= k; ++c) {
            const bool opens = c > 0 && sets[static_cast<std::size_t>(c)] == 0;
            sets[static_cast<std::size_t>(c)] |= 1u << v;
            const bool found = place(v + 1, used + (opens ? 1 : 0));
            sets[static_cast<std::size_t>(c)] &= ~(1u << v);
            if (found) return true;
        }
        return false;
    };
    return place(0, 0);
}

bool is_outerplanar(const LabeledGraph& g) {
    const int n = g.vertex_count();
    if (n > 8) {
        throw DimensionTooLarge("is_outerplanar: graph has " + std::to_string(n) + " vertices (cap 8)");
    }
    if (n >= 2 && g.edge_count() > 2 * n - 3) return false;
    return !has_minor(g, LabeledGraph::complete(4)) && !has_minor(g, LabeledGraph::complete_bipartite(2, 3));
}

namespace {

// Minimum number of deletions (among edges not in `forced_keep`) that leave
// the graph triangle-free, or INT_MAX if some triangle lies entirely inside
// `forced_keep`. `tris` holds each triangle as a triple of edge indices.
int min_deletions(const std::vector<std::array<int, 3>>& tris, uint64_t forced_keep) {
    int best = std::numeric_limits<int>::max();
    // Greedy edge-disjoint triangle packing: every packed triangle needs its
    // own deletion, so the packing size lower-bounds remaining deletions.
    auto packing_bound = [&tris, forced_keep](uint64_t deleted) -> int {
        uint64_t used = deleted;
        int count = 0;
        for (const auto& t : tris) {
            const uint64_t mask = (uint64_t{1} << t[0]) | (uint64_t{1} << t[1]) | (uint64_t{1} << t[2]);
            if (mask & used) continue;
            if ((mask & ~forced_keep) == 0) return std::numeric_limits<int>::max();
            used |= mask;
            ++count;
        }
        return count;
    };
    auto recurse = [&](auto&& self, uint64_t deleted, int count) -> void {
        if (count >= best) return;
        const int lb = packing_bound(deleted);
        if (lb == std::numeric_limits<int>::max()) return;
        if (count + lb >= best) return;
        const std::array<int, 3>* open = nullptr;
        for (const auto& t : tris) {
            const uint64_t mask = (uint64_t{1} << t[0]) | (uint64_t{1} << t[1]) | (uint64_t{1} << t[2]);
            if ((mask & deleted) == 0) {
                open = &t;
                break;
            }
        }
        if (open == nullptr) {
            best = count;
            return;
        }
        for (int e : *open) {
            if (forced_keep & (uint64_t{1} << e)) continue;
            self(self, deleted | (uint64_t{1} << e), count + 1);
        }
    };
    recurse(recurse, 0, 0);
    return best;
}

}  // namespace

MaxTriangleFree max_triangle_free_subgraph(const LabeledGraph& g) {
    const std::vector<std::pair<int, int>> edge_list(g.edges().begin(), g.edges().end());
    const int m = static_cast<int>(edge_list.size());
    if (m > 32) {
        throw TooLarge("max_triangle_free_subgraph: " + std::to_string(m) + " edges (cap 32)");
    }
    std::map<std::pair<int, int>, int> edge_index;
    for (int e = 0; e < m; ++e) edge_index[edge_list[e]] = e;
    std::vector<std::array<int, 3>> tris;
    for (const auto& t : g.triangles()) {
        tris.push_back({edge_index.at({t[0], t[1]}), edge_index.at({t[0], t[2]}),
                        edge_index.at({t[1], t[2]})});
    }
    MaxTriangleFree result;
    if (tris.empty()) {
        result.value = m;
        result.kept = edge_list;
        return result;
    }
    const int base = min_deletions(tris, 0);
    result.value = m - base;
    // Lexicographically smallest optimal kept set: commit each edge in order
    // iff some optimal solution keeps everything committed so far plus it.
    uint64_t keep = 0;
    for (int e = 0; e < m; ++e) {
        if (min_deletions(tris, keep | (uint64_t{1} << e)) == base) {
            keep |= uint64_t{1} << e;
            result.kept.push_back(edge_list[e]);
        }
    }
    return result;
}

GraphPredicates graph_predicates(const LabeledGraph& g) {
    GraphPredicates p;
    p.connected = g.is_connected();
    p.triangle_free = g.is_triangle_free();
    p.forest = g.is_forest();
    p.bipartition = g.complete_bipartite_parts();
    p.complete_bipartite = p.bipartition.has_value();
    p.outerplanar = is_outerplanar(g);
    for (int v = 0; v < g.vertex_count(); ++v) p.degrees.push_back(g.degree(v));
    return p;
}

}  // namespace copos

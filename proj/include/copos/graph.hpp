#pragma once

// Simple undirected labeled graphs with the exact structural predicates the
// analysis needs: connectivity, triangle enumeration, bipartiteness, forests,
// complete-bipartite recognition, and outerplanarity via forbidden minors.

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace copos {

class LabeledGraph {
public:
    LabeledGraph() = default;
    explicit LabeledGraph(std::vector<std::string> labels);

    // Standard families, labeled "1".."n".
    static LabeledGraph complete(int n);
    static LabeledGraph cycle(int n);
    static LabeledGraph path(int n);
    // Hub "1" joined to the cycle "2".."n"; n >= 4.
    static LabeledGraph wheel(int n);
    static LabeledGraph complete_bipartite(int a, int b);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    int index_of(const std::string& label) const;  // -1 when absent
    int add_vertex(const std::string& label);

    void add_edge(int u, int v);
    void add_edge(const std::string& u, const std::string& v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const;
    // Sorted pairs (u, v) with u < v.
    const std::set<std::pair<int, int>>& edges() const { return edges_; }
    std::vector<std::pair<std::string, std::string>> labeled_edges() const;

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    // Subgraph induced on the given vertex indices (order preserved, labels kept).
    LabeledGraph induced_subgraph(const std::vector<int>& vertices) const;
    LabeledGraph minus_vertex(int v) const;

    std::vector<std::vector<int>> connected_components() const;
    bool is_connected() const;  // vacuously true on <= 1 vertex
    std::vector<std::array<int, 3>> triangles() const;
    bool is_triangle_free() const;
    bool is_forest() const;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition() const;
    bool is_bipartite() const { return bipartition().has_value(); }
    // The whole graph equals K_{a,b} for some partition (requires >= 1 edge).
    std::optional<std::pair<std::vector<int>, std::vector<int>>> complete_bipartite_parts() const;
    bool is_complete_bipartite() const { return complete_bipartite_parts().has_value(); }
    bool is_disjoint_union_of_paths() const;
    // The whole graph is a single spanning cycle.
    bool is_cycle_graph() const;

    bool operator==(const LabeledGraph& other) const = default;

private:
    std::vector<std::string> labels_;
    std::set<std::pair<int, int>> edges_;
    void check_vertex(int v) const;
};

// True when g has an h-minor, decided by brute-force branch-set assignment.
// Guarded: throws DimensionTooLarge when g has more than 12 vertices.
bool has_minor(const LabeledGraph& g, const LabeledGraph& h);

// No K_4 minor and no K_{2,3} minor. Throws DimensionTooLarge above 8 vertices.
bool is_outerplanar(const LabeledGraph& g);

// Maximum number of edges of a triangle-free subgraph of g, together with
// the lexicographically smallest optimal kept-edge set (edges ordered as
// sorted index pairs). Branch-and-bound on uncovered triangles with a greedy
// edge-disjoint-triangle-packing lower bound. Guarded at 32 edges.
struct MaxTriangleFree {
    int value = 0;
    std::vector<std::pair<int, int>> kept;
};
MaxTriangleFree max_triangle_free_subgraph(const LabeledGraph& g);

struct GraphPredicates {
    bool connected = false;
    bool triangle_free = false;
    bool forest = false;
    bool complete_bipartite = false;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition;  // set iff complete_bipartite
    bool outerplanar = false;
    std::vector<int> degrees;
};
GraphPredicates graph_predicates(const LabeledGraph& g);

}  // namespace copos

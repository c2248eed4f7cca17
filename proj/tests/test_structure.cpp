#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "copos/exceptions.hpp"
#include "copos/graph.hpp"
#include "copos/index_set.hpp"

using namespace copos;

TEST_CASE("index set basics") {
    IndexSet s{3, 1, 2, 3};
    CHECK(s.size() == 3);
    CHECK(s.to_string() == "{1,2,3}");
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(4));
    CHECK(s.min() == 1);
    CHECK(s.mask() == 0b111u);
    CHECK(IndexSet::from_mask(0b10110u) == IndexSet{2, 3, 5});
    CHECK(IndexSet::full(4) == IndexSet{1, 2, 3, 4});
    CHECK_THROWS_AS(IndexSet{0}, BadInput);
}

TEST_CASE("index set algebra") {
    IndexSet a{1, 2, 5};
    IndexSet b{2, 3};
    CHECK(a.set_union(b) == IndexSet{1, 2, 3, 5});
    CHECK(a.set_intersection(b) == IndexSet{2});
    CHECK(a.set_difference(b) == IndexSet{1, 5});
    CHECK(a.intersects(b));
    CHECK_FALSE(a.intersects(IndexSet{3, 4}));
    CHECK(b.subset_of(IndexSet{1, 2, 3}));
    CHECK_FALSE(a.subset_of(b));
    CHECK(a.with(3) == IndexSet{1, 2, 3, 5});
    CHECK(a.without(2) == IndexSet{1, 5});
    CHECK(IndexSet{1, 2} < IndexSet{1, 3});
    CHECK(IndexSet{1, 2} < IndexSet{1, 2, 3});
}

TEST_CASE("graph construction and basic queries") {
    LabeledGraph g = LabeledGraph::cycle(5);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(g.degree(0) == 2);
    CHECK(g.has_edge(0, 4));
    CHECK(g.neighbors(0) == std::vector<int>{1, 4});
    CHECK(g.index_of("3") == 2);
    CHECK(g.index_of("x") == -1);
    CHECK_THROWS_AS(g.add_edge(0, 0), BadInput);

    LabeledGraph k4 = LabeledGraph::complete(4);
    CHECK(k4.edge_count() == 6);
    CHECK(LabeledGraph::wheel(4) == k4);

    LabeledGraph p3 = LabeledGraph::path(3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.is_disjoint_union_of_paths());
}

TEST_CASE("graph predicates on the standard examples") {
    LabeledGraph c5 = LabeledGraph::cycle(5);
    GraphPredicates p = graph_predicates(c5);
    CHECK(p.connected);
    CHECK(p.triangle_free);
    CHECK_FALSE(p.forest);
    CHECK_FALSE(p.complete_bipartite);
    CHECK(p.outerplanar);
    CHECK(p.degrees == std::vector<int>{2, 2, 2, 2, 2});

    LabeledGraph k22 = LabeledGraph::complete_bipartite(2, 2);
    auto parts = k22.complete_bipartite_parts();
    REQUIRE(parts.has_value());
    CHECK(parts->first == std::vector<int>{0, 1});
    CHECK(parts->second == std::vector<int>{2, 3});

    LabeledGraph p4 = LabeledGraph::path(4);
    CHECK(p4.is_connected());
    CHECK_FALSE(p4.is_complete_bipartite());
    CHECK(p4.is_forest());

    LabeledGraph k13 = LabeledGraph::complete_bipartite(1, 3);
    CHECK(k13.is_complete_bipartite());
}

TEST_CASE("triangle enumeration") {
    LabeledGraph k4 = LabeledGraph::complete(4);
    CHECK(k4.triangles().size() == 4);
    CHECK_FALSE(k4.is_triangle_free());
    CHECK(LabeledGraph::complete_bipartite(3, 3).is_triangle_free());
    CHECK(LabeledGraph::complete(6).triangles().size() == 20);
}

TEST_CASE("components, cycles, paths") {
    LabeledGraph g({"a", "b", "c", "d", "e"});
    g.add_edge(0, 1);
    g.add_edge(3, 4);
    auto comps = g.connected_components();
    CHECK(comps.size() == 3);
    CHECK_FALSE(g.is_connected());
    CHECK(g.is_forest());
    CHECK(g.is_disjoint_union_of_paths());
    CHECK_FALSE(g.is_cycle_graph());

    CHECK(LabeledGraph::cycle(4).is_cycle_graph());
    CHECK_FALSE(LabeledGraph::complete(4).is_cycle_graph());
}

TEST_CASE("minor detection") {
    LabeledGraph k4 = LabeledGraph::complete(4);
    LabeledGraph k23 = LabeledGraph::complete_bipartite(2, 3);
    CHECK(has_minor(k4, k4));
    CHECK_FALSE(has_minor(LabeledGraph::cycle(5), k4));
    CHECK_FALSE(has_minor(k4, k23));  // too few vertices
    CHECK(has_minor(k23, k23));
    CHECK(has_minor(LabeledGraph::complete(5), k23));
    // K5 minus a perfect matching is C5-ish; contractions matter: wheel(5)
    // contracts a rim edge to W4 = K4.
    CHECK(has_minor(LabeledGraph::wheel(5), k4));
    // A tree has no K4 or K23 minor.
    CHECK_FALSE(has_minor(LabeledGraph::path(6), k4));
    CHECK_FALSE(has_minor(LabeledGraph::path(6), k23));
}

TEST_CASE("outerplanarity") {
    CHECK(is_outerplanar(LabeledGraph::cycle(5)));
    CHECK(is_outerplanar(LabeledGraph::path(6)));
    CHECK_FALSE(is_outerplanar(LabeledGraph::complete(4)));
    CHECK_FALSE(is_outerplanar(LabeledGraph::complete_bipartite(2, 3)));
    CHECK_FALSE(is_outerplanar(LabeledGraph::wheel(5)));
    CHECK_FALSE(is_outerplanar(LabeledGraph::wheel(6)));

    // Fan: path plus a hub adjacent to all — outerplanar.
    LabeledGraph fan = LabeledGraph::path(4);
    int hub = fan.add_vertex("hub");
    for (int v = 0; v < 4; ++v) fan.add_edge(hub, v);
    CHECK(is_outerplanar(fan));

    // Two triangles sharing an edge: outerplanar; sharing no vertex: outerplanar.
    LabeledGraph diamond({"1", "2", "3", "4"});
    diamond.add_edge(0, 1);
    diamond.add_edge(0, 2);
    diamond.add_edge(1, 2);
    diamond.add_edge(1, 3);
    diamond.add_edge(2, 3);
    CHECK(is_outerplanar(diamond));

    LabeledGraph big = LabeledGraph::complete(9);
    CHECK_THROWS_AS(is_outerplanar(big), DimensionTooLarge);
}

TEST_CASE("induced subgraphs") {
    LabeledGraph k5 = LabeledGraph::complete(5);
    LabeledGraph sub = k5.induced_subgraph({0, 2, 4});
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.edge_count() == 3);
    CHECK(sub.labels() == std::vector<std::string>{"1", "3", "5"});

    LabeledGraph m = k5.minus_vertex(0);
    CHECK(m.vertex_count() == 4);
    CHECK(m.edge_count() == 6);
}

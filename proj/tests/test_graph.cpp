#include "doctest.h"

#include "inj/corpus.hpp"
#include "inj/generate.hpp"
#include "inj/graph.hpp"

using namespace inj;

namespace {

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::build(n, e);
}

} // namespace

TEST_CASE("build_graph accepts simple graphs and rejects the rest") {
    Graph k3 = Graph::build(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);

    CHECK_THROWS_WITH_AS(Graph::build(2, {{0, 0}}), doctest::Contains("LoopEdge"), Error);
    CHECK_THROWS_WITH_AS(Graph::build(4, {{0, 1}, {0, 1}}), doctest::Contains("DuplicateEdge"), Error);
    CHECK_THROWS_WITH_AS(Graph::build(4, {{1, 0}, {0, 1}}), doctest::Contains("DuplicateEdge"), Error);
    CHECK_THROWS_WITH_AS(Graph::build(3, {{0, 3}}), doctest::Contains("VertexOutOfRange"), Error);
}

TEST_CASE("degrees and extremes") {
    const Graph& petersen = corpus_get("petersen").graph;
    for (int d : petersen.degrees()) CHECK(d == 3);
    CHECK(petersen.max_degree() == 3);

    const Graph& star = corpus_get("k1_5").graph;
    CHECK(star.degree(0) == 5);
    CHECK(star.min_degree() == 1);

    CHECK(path(4).degrees() == std::vector<int>{1, 2, 2, 1});

    Graph empty = Graph::build(0, {});
    CHECK_THROWS_AS((void)empty.max_degree(), Error);
    CHECK_THROWS_AS((void)empty.min_degree(), Error);
}

TEST_CASE("girth") {
    CHECK(corpus_get("heawood").graph.girth() == std::optional<int>(6));
    CHECK(corpus_get("k4").graph.girth() == std::optional<int>(3));
    CHECK(path(7).girth() == std::nullopt);
    CHECK(corpus_get("petersen").graph.girth() == std::optional<int>(5));
    Rng rng(7);
    for (int i = 0; i < 10; ++i) CHECK(random_tree(2 + rng.below(12), rng).girth() == std::nullopt);
}

TEST_CASE("bipartition sides and odd-cycle witness") {
    auto c6 = corpus_get("c6").graph;
    auto bp = bipartition(c6);
    REQUIRE(bp.has_value());
    CHECK(bp->side_a.size() == 3);
    CHECK(bp->side_b.size() == 3);
    CHECK(bp->delta_a == 2);

    std::vector<VertexId> witness;
    auto c5 = corpus_get("c5").graph;
    CHECK_FALSE(bipartition(c5, &witness).has_value());
    CHECK(witness.size() % 2 == 1);
    // witness must be a genuine cycle of the graph
    for (std::size_t i = 0; i < witness.size(); ++i)
        CHECK(c5.has_edge(witness[i], witness[(i + 1) % witness.size()]));

    // fig1 splits as {v1,v2,v5,v8,v9} vs the rest
    auto fig1 = corpus_get("fig1_bipartite_cubic").graph;
    auto fbp = bipartition(fig1);
    REQUIRE(fbp.has_value());
    CHECK(fbp->side_a == std::vector<VertexId>{0, 1, 4, 7, 8});
    CHECK(fbp->delta_a == 3);
    CHECK(fbp->delta_b == 3);
}

TEST_CASE("connected components") {
    Graph two_triangles = Graph::build(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    auto comps = connected_components(two_triangles);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<VertexId>{0, 1, 2});
    CHECK(comps[1] == std::vector<VertexId>{3, 4, 5});

    CHECK(connected_components(corpus_get("petersen").graph).size() == 1);
    CHECK(connected_components(Graph::build(5, {})).size() == 5);
}

TEST_CASE("edges_conflict cases") {
    Graph p3 = path(3);
    CHECK_FALSE(edges_conflict(p3, 0, 1)); // adjacent, no triangle

    Graph k3 = Graph::build(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(edges_conflict(k3, 0, 1));
    CHECK(edges_conflict(k3, 0, 2));
    CHECK(edges_conflict(k3, 1, 2));

    Graph p4 = path(4);
    CHECK(edges_conflict(p4, 0, 2)); // end edges of a length-3 path
    CHECK_FALSE(edges_conflict(p4, 0, 1));

    CHECK_THROWS_WITH_AS((void)edges_conflict(p4, 1, 1), doctest::Contains("SameEdge"), Error);
}

TEST_CASE("conflict graphs of small fixtures") {
    Graph p4 = path(4);
    auto cg = conflict_graph(p4);
    CHECK(cg.base.vertex_count() == 3);
    CHECK(cg.base.edge_count() == 1);
    CHECK(cg.base.has_edge(0, 2));

    auto k3 = conflict_graph(Graph::build(3, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK(k3.base.edge_count() == 3);

    auto k4 = conflict_graph(corpus_get("k4").graph);
    CHECK(k4.base.vertex_count() == 6);
    CHECK(k4.base.edge_count() == 15); // K6
}

TEST_CASE("conflict relation is symmetric and degree-bounded") {
    Rng rng(2024);
    for (int round = 0; round < 30; ++round) {
        int n = 4 + rng.below(8);
        Graph g = random_graph(n, rng.below(n * (n - 1) / 2 + 1), rng);
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            for (EdgeId f = e + 1; f < g.edge_count(); ++f)
                CHECK(edges_conflict(g, e, f) == edges_conflict(g, f, e));
        if (g.vertex_count() == 0 || g.edge_count() == 0) continue;
        int delta = g.max_degree();
        if (delta < 1) continue;
        auto cg = conflict_graph(g);
        for (int v = 0; v < cg.base.vertex_count(); ++v)
            CHECK(cg.base.degree(v) <= 2 * (delta - 1) * (delta - 1));
    }
}

TEST_CASE("bipartite graphs have even or infinite girth") {
    Rng rng(99);
    for (int round = 0; round < 40; ++round) {
        int n = 3 + rng.below(9);
        Graph g = random_graph(n, rng.below(2 * n), rng);
        if (!bipartition(g)) continue;
        auto girth = g.girth();
        if (girth) CHECK(*girth % 2 == 0);
    }
}

#include "inj/corpus.hpp"

#include <map>

#include "inj/mad.hpp"

namespace inj {

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::build(n, e);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::build(n, e);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::build(leaves + 1, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::build(a + b, e);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::build(n, e);
}

Graph prism_graph() {
    return Graph::build(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);         // outer cycle
        e.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        e.emplace_back(i, 5 + i);               // spokes
    }
    return Graph::build(10, e);
}

// LCF [5, -5]^7: a 14-cycle with chords i -> i+5 from even vertices.
Graph heawood_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 14; ++i) e.emplace_back(i, (i + 1) % 14);
    for (int i = 0; i < 14; i += 2) e.emplace_back(i, (i + 5) % 14);
    return Graph::build(14, e);
}

// Cubic bipartite graph on v1..v10 needing 5 colors; adjacency transcribed
// from the figure.
Graph fig1_graph() {
    auto v = [](int i) { return i - 1; };
    std::vector<std::pair<int, int>> e = {
        {v(1), v(3)}, {v(1), v(4)}, {v(1), v(7)}, {v(2), v(3)}, {v(2), v(4)},
        {v(2), v(6)}, {v(3), v(8)}, {v(4), v(5)}, {v(5), v(6)}, {v(5), v(10)},
        {v(6), v(9)}, {v(7), v(8)}, {v(7), v(9)}, {v(8), v(10)}, {v(9), v(10)},
    };
    return Graph::build(10, e);
}

// C5 with one pendant vertex on each cycle vertex.
Graph fig2_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, 5 + i);
    }
    return Graph::build(10, e);
}

// Outerplanar graph with max degree 3 needing 5 colors: vertices
// u,u1..u5,v,v1..v5 as ids 0..11.
Graph fig3_graph() {
    int u = 0, u1 = 1, u2 = 2, u3 = 3, u4 = 4, u5 = 5;
    int v = 6, v1 = 7, v2 = 8, v3 = 9, v4 = 10, v5 = 11;
    std::vector<std::pair<int, int>> e = {
        {u, u1}, {u, u2}, {u1, u2}, {u, v},   {u1, u5}, {u2, u3}, {u3, u4}, {u4, u5}, {u3, u5},
        {v, v1}, {v, v2}, {v1, v2}, {v1, v5}, {v2, v3}, {v3, v4}, {v4, v5}, {v3, v5},
    };
    return Graph::build(12, e);
}

int cycle_expected(int n) { return n % 4 == 0 ? 2 : 3; }

std::vector<NamedGraph> build_corpus() {
    std::vector<NamedGraph> out;
    auto add = [&](std::string name, Graph g, std::optional<int> index, std::optional<Rational> mad,
                   std::string provenance) {
        out.push_back({std::move(name), std::move(g), index, mad, std::move(provenance)});
    };
    for (int n = 2; n <= 12; ++n)
        add("p" + std::to_string(n), path_graph(n), n >= 4 ? 2 : 1, std::nullopt,
            "Cardoso et al., paths");
    for (int n = 3; n <= 12; ++n)
        add("c" + std::to_string(n), cycle_graph(n), cycle_expected(n), std::nullopt,
            "Cardoso et al., cycles");
    for (int leaves : {3, 5, 7})
        add("k1_" + std::to_string(leaves), star_graph(leaves), 1, std::nullopt, "stars need one color");
    add("k3_3", complete_bipartite(3, 3), 3, std::nullopt, "complete bipartite, min side");
    add("k4_7", complete_bipartite(4, 7), 4, std::nullopt, "complete bipartite, min side");
    add("k4", complete_graph(4), 6, std::nullopt, "cubic graph with index 6");
    add("prism", prism_graph(), 6, std::nullopt, "cubic graph with index 6");
    add("petersen", petersen_graph(), std::nullopt, std::nullopt,
        "value recorded by the exact solver, cross-checked by brute force");
    add("heawood", heawood_graph(), 4, std::nullopt, "the (3,6)-cage; 4-colorable");
    add("fig1_bipartite_cubic", fig1_graph(), 5, std::nullopt,
        "cubic bipartite graph with index 5");
    add("fig2_sun", fig2_graph(), 4, Rational(2, 1), "mad 2 but index 4");
    add("fig3_outerplanar", fig3_graph(), 5, std::nullopt,
        "outerplanar, max degree 3, index 5");
    return out;
}

const std::vector<NamedGraph>& corpus() {
    static const std::vector<NamedGraph> fixtures = build_corpus();
    return fixtures;
}

} // namespace

const NamedGraph& corpus_get(const std::string& name) {
    for (const auto& fixture : corpus())
        if (fixture.name == name) return fixture;
    throw Error(Errc::UnknownName, "no corpus graph named '" + name + "'");
}

std::vector<std::string> corpus_list() {
    std::vector<std::string> names;
    for (const auto& fixture : corpus()) names.push_back(fixture.name);
    return names;
}

void corpus_structural_check(const NamedGraph& fixture) {
    auto fail = [&](const std::string& what) {
        throw Error(Errc::Internal, "fixture " + fixture.name + ": " + what);
    };
    const Graph& g = fixture.graph;
    if (fixture.name == "fig1_bipartite_cubic") {
        if (g.max_degree() != 3 || g.min_degree() != 3) fail("not cubic");
        if (!bipartition(g)) fail("not bipartite");
    } else if (fixture.name == "fig3_outerplanar") {
        if (g.max_degree() != 3) fail("max degree is not 3");
    } else if (fixture.name == "fig2_sun") {
        if (mad_exact(g) != Rational(2, 1)) fail("mad is not exactly 2");
    } else if (fixture.name == "heawood") {
        if (g.vertex_count() != 14 || g.edge_count() != 21) fail("not 14 vertices / 21 edges");
        if (g.girth() != std::optional<int>(6)) fail("girth is not 6");
        if (!bipartition(g)) fail("not bipartite");
        if (g.max_degree() != 3 || g.min_degree() != 3) fail("not cubic");
    }
    if (fixture.expected_mad && g.vertex_count() > 0 && mad_exact(g) != *fixture.expected_mad)
        fail("mad mismatch");
}

} // namespace inj

#include "doctest.h"

#include "json.hpp"

#include "inj/corpus.hpp"
#include "inj/generate.hpp"
#include "inj/io.hpp"

using namespace inj;

namespace {

bool same_graph(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    for (auto [u, v] : a.edges())
        if (!b.has_edge(u, v)) return false;
    return true;
}

} // namespace

TEST_CASE("edge list parsing") {
    Graph k3 = read_edgelist("3 3\n0 1\n1 2\n2 0\n");
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK_THROWS_WITH_AS((void)read_edgelist("3 3\n0 1\n"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS((void)read_edgelist("2 1\n0 0\n"), doctest::Contains("LoopEdge"), Error);
}

TEST_CASE("graph6 class strings decode and re-encode byte-identically") {
    Graph star = read_graph6("D?{");
    CHECK(star.vertex_count() == 5);
    CHECK(star.edge_count() == 4);
    CHECK(star.degree(4) == 4); // K_{1,4} centered at the last vertex
    CHECK(write_graph6(star) == "D?{");

    // with the optional header
    Graph again = read_graph6(">>graph6<<D?{");
    CHECK(same_graph(star, again));

    CHECK_THROWS_WITH_AS((void)read_graph6(":Fa@x^"), doctest::Contains("sparse6"), Error);
    CHECK_THROWS_WITH_AS((void)read_graph6("D"), doctest::Contains("ParseError"), Error);
}

TEST_CASE("dimacs parsing") {
    Graph g = read_dimacs("c a comment\np edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_WITH_AS((void)read_dimacs("p edge 3 1\ne 0 1\n"), doctest::Contains("1-indexed"), Error);
    CHECK_THROWS_WITH_AS((void)read_dimacs("e 1 2\n"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS((void)read_dimacs("p edge 3 2\ne 1 2\n"), doctest::Contains("FormatViolation"),
                         Error);
}

TEST_CASE("round trips on random graphs and the corpus") {
    Rng rng(404);
    for (int round = 0; round < 40; ++round) {
        int n = 1 + rng.below(10);
        Graph g = random_graph(n, rng.below(n * (n - 1) / 2 + 1), rng);
        CHECK(same_graph(g, read_graph6(write_graph6(g))));
        CHECK(same_graph(g, read_edgelist(write_edgelist(g))));
        CHECK(same_graph(g, read_dimacs(write_dimacs(g))));
        CHECK(write_graph6(read_graph6(write_graph6(g))) == write_graph6(g));
    }
    for (const auto& name : corpus_list()) {
        const Graph& g = corpus_get(name).graph;
        CHECK(same_graph(g, read_graph6(write_graph6(g))));
        CHECK(same_graph(g, read_edgelist(write_edgelist(g))));
        CHECK(same_graph(g, read_dimacs(write_dimacs(g))));
    }
}

TEST_CASE("format detection by extension") {
    CHECK(format_from_path("x.g6") == GraphFormat::Graph6);
    CHECK(format_from_path("x.col") == GraphFormat::Dimacs);
    CHECK(format_from_path("x.txt") == GraphFormat::EdgeList);
}

TEST_CASE("result JSON re-parses with the embedded coloring intact") {
    const Graph& g = corpus_get("c5").graph;
    std::string text = write_result_json(g, "exact", 3, {1, 1, 2, 2, 3}, {0, 2});
    auto doc = nlohmann::json::parse(text);
    CHECK(doc["graph"]["n"] == 5);
    CHECK(doc["index_or_bound"] == 3);
    CHECK(doc["colors"].get<std::vector<int>>() == std::vector<int>{1, 1, 2, 2, 3});
    CHECK(doc["valid"] == true);
    CHECK(doc["certificates"]["clique"].size() == 2);

    std::string tsv = write_result_tsv(g, {1, 1, 2, 2, 3});
    CHECK(tsv.substr(0, 21) == "edge_u\tedge_v\tcolor\n0");

    auto madj = nlohmann::json::parse(write_mad_json(g, Rational(2, 1)));
    CHECK(madj["mad"]["num"] == 2);
    CHECK(madj["mad"]["den"] == 1);
}

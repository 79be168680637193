#include "doctest.h"

#include "inj/corpus.hpp"
#include "inj/generate.hpp"
#include "inj/mad.hpp"

using namespace inj;

namespace {

// Independent oracle: maximize 2|E(W)|/|W| over all non-empty induced
// vertex subsets. Exponential; fine below a dozen vertices.
Rational mad_brute(const Graph& g) {
    int n = g.vertex_count();
    REQUIRE(n >= 1);
    REQUIRE(n <= 20);
    Rational best(0, 1);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        int vertices = __builtin_popcount(mask);
        int edges = 0;
        for (auto [u, v] : g.edges())
            if ((mask >> u & 1) && (mask >> v & 1)) ++edges;
        Rational density(2 * edges, vertices);
        if (density > best) best = density;
    }
    return best;
}

} // namespace

TEST_CASE("mad on named graphs") {
    CHECK(mad_exact(corpus_get("fig2_sun").graph) == Rational(2, 1));
    CHECK(mad_exact(corpus_get("p4").graph) == Rational(3, 2));
    CHECK(mad_exact(corpus_get("petersen").graph) == Rational(3, 1));
    CHECK(mad_exact(corpus_get("k4").graph) == Rational(3, 1));
    CHECK(mad_exact(corpus_get("heawood").graph) == Rational(3, 1));
    CHECK(mad_exact(Graph::build(4, {})) == Rational(0, 1));
    CHECK_THROWS_WITH_AS((void)mad_exact(Graph::build(0, {})), doctest::Contains("EmptyGraph"), Error);
}

TEST_CASE("mad matches the induced-subset oracle on random graphs") {
    Rng rng(41);
    for (int round = 0; round < 60; ++round) {
        int n = 1 + rng.below(10);
        Graph g = random_graph(n, rng.below(2 * n + 1), rng);
        CHECK(mad_exact(g) == mad_brute(g));
    }
}

TEST_CASE("mad basic inequalities") {
    Rng rng(42);
    for (int round = 0; round < 40; ++round) {
        int n = 2 + rng.below(10);
        Graph g = random_graph(n, rng.below(2 * n), rng);
        Rational mad = mad_exact(g);
        CHECK(mad >= Rational(2 * g.edge_count(), g.vertex_count()));
        if (g.girth())
            CHECK(mad >= Rational(2, 1));
        else
            CHECK(mad < Rational(2, 1));
    }
}

TEST_CASE("densest subgraph witness achieves the density") {
    Rng rng(43);
    for (int round = 0; round < 20; ++round) {
        int n = 2 + rng.below(9);
        Graph g = random_graph(n, rng.below(2 * n), rng);
        auto w = densest_subgraph(g);
        REQUIRE(!w.empty());
        int edges = 0;
        std::vector<char> inside(static_cast<std::size_t>(n), 0);
        for (VertexId v : w) inside[static_cast<std::size_t>(v)] = 1;
        for (auto [u, v] : g.edges())
            if (inside[static_cast<std::size_t>(u)] && inside[static_cast<std::size_t>(v)]) ++edges;
        CHECK(Rational(2 * edges, static_cast<int>(w.size())) == mad_exact(g));
    }
}

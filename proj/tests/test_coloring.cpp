#include "doctest.h"

#include <set>

#include "inj/coloring.hpp"
#include "inj/corpus.hpp"
#include "inj/generate.hpp"
#include "inj/solver.hpp"

using namespace inj;

namespace {

// Definitional checker: valid iff no conflicting pair shares a color.
bool brute_valid(const Graph& g, const EdgeColoring& c) {
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (EdgeId f = e + 1; f < g.edge_count(); ++f)
            if (c.colors[static_cast<std::size_t>(e)] == c.colors[static_cast<std::size_t>(f)] &&
                edges_conflict(g, e, f))
                return false;
    return true;
}

} // namespace

TEST_CASE("verify_injective on the cycle and star examples") {
    const Graph& c4 = corpus_get("c4").graph;
    CHECK(verify_injective(c4, {{1, 1, 2, 2}}).valid);

    auto bad = verify_injective(c4, {{1, 2, 1, 2}});
    REQUIRE_FALSE(bad.valid);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->e1 == 0);
    CHECK(bad.witness->e2 == 2);
    // witness re-checks as a genuine violation
    CHECK(edges_conflict(c4, bad.witness->e1, bad.witness->e2));

    const Graph& star = corpus_get("k1_5").graph;
    CHECK(verify_injective(star, {{1, 1, 1, 1, 1}}).valid);

    CHECK_THROWS_WITH_AS((void)verify_injective(c4, {{1, 2}}), doctest::Contains("PartialColoring"), Error);
    CHECK_THROWS_WITH_AS((void)verify_injective(c4, {{1, 2, 0, 1}}), doctest::Contains("PartialColoring"),
                         Error);
}

TEST_CASE("verify_injective agrees with the quadratic definitional checker") {
    Rng rng(17);
    for (int round = 0; round < 50; ++round) {
        int n = 3 + rng.below(7);
        Graph g = random_graph(n, rng.below(2 * n), rng);
        EdgeColoring c;
        for (EdgeId e = 0; e < g.edge_count(); ++e) c.colors.push_back(1 + rng.below(3));
        CHECK(verify_injective(g, c).valid == brute_valid(g, c));
    }
}

TEST_CASE("verify_star_coloring") {
    const Graph& p4 = corpus_get("p4").graph;
    CHECK(verify_star_coloring(p4, {{1, 2, 3, 1}}).valid);

    auto bicolored = verify_star_coloring(p4, {{1, 2, 1, 2}});
    REQUIRE_FALSE(bicolored.valid);
    CHECK(bicolored.witness->path.size() == 4);

    auto improper = verify_star_coloring(p4, {{1, 1, 2, 3}});
    REQUIRE_FALSE(improper.valid);
    CHECK(improper.witness->path.size() == 2);
}

TEST_CASE("star forest decomposition certifies classes") {
    const Graph& star = corpus_get("k1_5").graph;
    auto one = star_forest_decomposition(star, {{1, 1, 1, 1, 1}});
    CHECK(one.classes.size() == 1);
    CHECK(one.classes[0].size() == 5);

    const Graph& c4 = corpus_get("c4").graph;
    auto two = star_forest_decomposition(c4, {{1, 1, 2, 2}});
    CHECK(two.classes.size() == 2);

    // any optimal Petersen coloring decomposes into index-many classes
    const Graph& petersen = corpus_get("petersen").graph;
    auto solved = injective_chromatic_index(petersen);
    auto classes = star_forest_decomposition(petersen, solved.coloring);
    CHECK(static_cast<int>(classes.classes.size()) == solved.index);

    CHECK_THROWS_WITH_AS((void)star_forest_decomposition(c4, {{1, 2, 1, 2}}),
                         doctest::Contains("NotInjective"), Error);
}

TEST_CASE("partitions into induced star forests read back as valid colorings") {
    for (const auto& name : {"p6", "c8", "k4", "petersen", "fig2_sun"}) {
        const Graph& g = corpus_get(name).graph;
        auto solved = injective_chromatic_index(g);
        auto classes = star_forest_decomposition(g, solved.coloring);
        EdgeColoring rebuilt;
        rebuilt.colors.assign(static_cast<std::size_t>(g.edge_count()), 0);
        int color = 1;
        for (const auto& klass : classes.classes) {
            for (EdgeId e : klass) rebuilt.colors[static_cast<std::size_t>(e)] = color;
            ++color;
        }
        CHECK(verify_injective(g, rebuilt).valid);
    }
}

TEST_CASE("star_to_injective") {
    const Graph& p4 = corpus_get("p4").graph;
    auto c = star_to_injective(p4, {{1, 2, 3, 1}});
    CHECK(c.palette_size() == 3);
    CHECK(verify_injective(p4, c).valid);

    Graph k3 = Graph::build(3, {{0, 1}, {1, 2}, {2, 0}});
    auto ck3 = star_to_injective(k3, {{1, 2, 3}});
    CHECK(ck3.palette_size() == 3);
    CHECK(verify_injective(k3, ck3).valid);

    CHECK_THROWS_WITH_AS((void)star_to_injective(p4, {{1, 2, 1, 2}}), doctest::Contains("NotStarColoring"),
                         Error);

    Rng rng(5);
    for (int round = 0; round < 30; ++round) {
        Graph t = random_tree(2 + rng.below(9), rng);
        auto vc = greedy_star_coloring(t);
        REQUIRE(verify_star_coloring(t, vc).valid);
        int k = vc.palette_size();
        auto edge = star_to_injective(t, vc);
        CHECK(verify_injective(t, edge).valid);
        CHECK(edge.palette_size() <= k * (k - 1) / 2);
    }
}

TEST_CASE("injective_to_star on the worked example") {
    const Graph& p4 = corpus_get("p4").graph;
    auto vc = injective_to_star(p4, {{1, 1, 2}});
    CHECK(verify_star_coloring(p4, vc).valid);
    CHECK(vc.palette_size() == 3);
    CHECK(vc.colors[0] == vc.colors[3]); // both endpoints are degree-1, all-zeros
    CHECK(vc.colors[0] == 0);

    const Graph& c4 = corpus_get("c4").graph;
    auto vc4 = injective_to_star(c4, {{1, 1, 2, 2}});
    CHECK(verify_star_coloring(c4, vc4).valid);
    CHECK(vc4.palette_size() <= 3); // 2^2 - 1 since the minimum degree is 2

    CHECK_THROWS_WITH_AS((void)injective_to_star(c4, {{1, 2, 1, 2}}), doctest::Contains("NotInjective"),
                         Error);
}

TEST_CASE("injective_to_star handles isolated edges per component") {
    Graph g = Graph::build(6, {{0, 1}, {2, 3}, {3, 4}, {4, 5}}); // K2 + P4
    EdgeColoring c{{1, 1, 1, 2}};
    REQUIRE(verify_injective(g, c).valid);
    auto vc = injective_to_star(g, c);
    CHECK(verify_star_coloring(g, vc).valid);
    CHECK(vc.colors[0] != vc.colors[1]); // the isolated edge is two-colored
}

TEST_CASE("round-trip transformation bounds") {
    Rng rng(6);
    for (int round = 0; round < 25; ++round) {
        int n = 3 + rng.below(7);
        Graph g = random_graph(n, 2 + rng.below(2 * n), rng);
        if (g.edge_count() == 0) continue;
        auto solved = injective_chromatic_index(g);
        int k = solved.index;
        auto vc = injective_to_star(g, solved.coloring);
        CHECK(verify_star_coloring(g, vc).valid);
        CHECK(vc.palette_size() <= (1 << k));
        if (g.min_degree() >= 2) CHECK(vc.palette_size() <= (1 << k) - 1);
    }
}

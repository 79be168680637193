#include "doctest.h"

#include <set>

#include "inj/bounds.hpp"
#include "inj/corpus.hpp"
#include "inj/generate.hpp"
#include "inj/mad.hpp"
#include "inj/solver.hpp"

using namespace inj;

namespace {

void check_bound(const Graph& g, const BoundResult& r) {
    CHECK(verify_injective(g, r.coloring).valid);
    CHECK(r.coloring.palette_size() <= r.bound_claimed);
}

} // namespace

TEST_CASE("find_reducible_configuration spot checks") {
    auto p5 = find_reducible_configuration(corpus_get("p5").graph, Ruleset::Mad73);
    REQUIRE(p5.has_value());
    CHECK(p5->kind == Configuration::Kind::WeakTwoVertex);

    CHECK_FALSE(find_reducible_configuration(corpus_get("k4").graph, Ruleset::Mad3).has_value());

    auto fig3 = find_reducible_configuration(corpus_get("fig3_outerplanar").graph, Ruleset::Outerplanar);
    REQUIRE(fig3.has_value());
    CHECK(fig3->kind == Configuration::Kind::ChainCycleTwoAnchors);
    CHECK(fig3->vertices == std::vector<VertexId>{3, 4, 5}); // u3, u4, u5
}

TEST_CASE("each mad73 configuration kind fires on a crafted fixture") {
    using K = Configuration::Kind;

    // two triangles joined by a three-edge path: the triangle configuration
    Graph tri = Graph::build(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}});
    REQUIRE(mad_exact(tri) < Rational(7, 3));
    auto ctri = find_reducible_configuration(tri, Ruleset::Mad73);
    REQUIRE(ctri.has_value());
    CHECK(ctri->kind == K::TriangleTwoTwos);
    auto rtri = color_subcubic_mad(tri, Ruleset::Mad73);
    CHECK(verify_injective(tri, rtri.coloring).valid);
    CHECK(rtri.coloring.palette_size() <= 4);
    CHECK(brute_force_index(tri) <= rtri.coloring.palette_size());

    // two squares joined by a three-edge path: the 4-cycle configuration
    Graph sq = Graph::build(10, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6},
                                 {6, 7}, {7, 8}, {8, 9}, {9, 6}});
    REQUIRE(mad_exact(sq) < Rational(7, 3));
    auto csq = find_reducible_configuration(sq, Ruleset::Mad73);
    REQUIRE(csq.has_value());
    CHECK(csq->kind == K::FourCycleThreeTwos);
    auto rsq = color_subcubic_mad(sq, Ruleset::Mad73);
    CHECK(verify_injective(sq, rsq.coloring).valid);
    CHECK(rsq.coloring.palette_size() <= 4);
    CHECK(brute_force_index(sq) <= rsq.coloring.palette_size());

    // theta graph with three length-5 chains: the path configuration
    std::vector<std::pair<int, int>> theta_edges;
    int next = 2;
    for (int chain = 0; chain < 3; ++chain) {
        int prev = 0;
        for (int i = 0; i < 4; ++i) {
            theta_edges.emplace_back(prev, next);
            prev = next++;
        }
        theta_edges.emplace_back(prev, 1);
    }
    Graph theta = Graph::build(next, theta_edges);
    REQUIRE(mad_exact(theta) < Rational(7, 3));
    auto cth = find_reducible_configuration(theta, Ruleset::Mad73);
    REQUIRE(cth.has_value());
    CHECK(cth->kind == K::PathThreeTwos);
    auto rth = color_subcubic_mad(theta, Ruleset::Mad73);
    CHECK(verify_injective(theta, rth.coloring).valid);
    CHECK(rth.coloring.palette_size() <= 4);
    CHECK(injective_chromatic_index(theta).index <= rth.coloring.palette_size());

    // K4 with every edge subdivided twice: the branch configuration
    std::vector<std::pair<int, int>> sub_edges;
    next = 4;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) {
            sub_edges.emplace_back(u, next);
            sub_edges.emplace_back(next, next + 1);
            sub_edges.emplace_back(next + 1, v);
            next += 2;
        }
    Graph subdiv = Graph::build(next, sub_edges);
    REQUIRE(mad_exact(subdiv) == Rational(9, 4));
    auto cbr = find_reducible_configuration(subdiv, Ruleset::Mad73);
    REQUIRE(cbr.has_value());
    CHECK(cbr->kind == K::BranchThreeTwos);
    auto rbr = color_subcubic_mad(subdiv, Ruleset::Mad73);
    CHECK(verify_injective(subdiv, rbr.coloring).valid);
    CHECK(rbr.coloring.palette_size() <= 4);
    CHECK(injective_chromatic_index(subdiv).index <= rbr.coloring.palette_size());

    // weak 2-vertex and 3-vertex-with-two-pendants
    Graph pend = Graph::build(4, {{0, 1}, {1, 2}, {1, 3}});
    auto cpend = find_reducible_configuration(pend, Ruleset::Mad73);
    REQUIRE(cpend.has_value());
    CHECK(cpend->kind == K::ThreeVertexTwoOnes);
}

TEST_CASE("mad73 colors the sun graph with four colors") {
    const Graph& sun = corpus_get("fig2_sun").graph;
    ReductionTrace trace;
    auto r = color_subcubic_mad(sun, Ruleset::Mad73, false, &trace);
    CHECK(r.bound_claimed == 4);
    check_bound(sun, r);
    CHECK(r.coloring.palette_size() == 4); // exact value is 4
    CHECK_FALSE(trace.steps.empty());

    // trace deletions cover each edge at most once
    std::set<EdgeId> removed;
    for (const auto& step : trace.steps)
        for (EdgeId e : step.config.remove_edges) CHECK(removed.insert(e).second);
}

TEST_CASE("reduction traces replay forward to the base and backward to the input") {
    Rng rng(60);
    for (int round = 0; round < 10; ++round) {
        Graph g = random_connected_subcubic(6 + rng.below(8), rng.below(2), rng);
        Rational mad = mad_exact(g);
        if (!(mad < Rational(8, 3))) continue;
        ReductionTrace trace;
        (void)color_subcubic_mad(g, Ruleset::Mad83, false, &trace);
        std::vector<char> present(static_cast<std::size_t>(g.edge_count()), 1);
        for (const auto& step : trace.steps)
            for (EdgeId e : step.config.remove_edges) {
                CHECK(present[static_cast<std::size_t>(e)] == 1);
                present[static_cast<std::size_t>(e)] = 0;
            }
        for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it)
            for (EdgeId e : it->config.remove_edges) {
                CHECK(present[static_cast<std::size_t>(e)] == 0);
                present[static_cast<std::size_t>(e)] = 1;
            }
        for (char p : present) CHECK(p == 1);
    }
}

TEST_CASE("mad73 on trees and sparse graphs") {
    Rng rng(55);
    for (int round = 0; round < 30; ++round) {
        Graph t = random_tree(2 + rng.below(12), rng);
        if (t.max_degree() > 3) continue;
        auto r = color_subcubic_mad(t, Ruleset::Mad73);
        CHECK(r.bound_claimed == 4);
        check_bound(t, r);
    }
}

TEST_CASE("mad83 and mad3 on eligible random graphs") {
    Rng rng(56);
    int done83 = 0, done3 = 0;
    for (int round = 0; round < 400 && (done83 < 20 || done3 < 20); ++round) {
        int n = 5 + rng.below(10);
        Graph g = random_connected_subcubic(n, rng.below(3), rng);
        Rational mad = mad_exact(g);
        if (mad < Rational(8, 3) && done83 < 20) {
            ++done83;
            auto r = color_subcubic_mad(g, Ruleset::Mad83);
            CHECK(r.bound_claimed == 6);
            check_bound(g, r);
            if (g.edge_count() <= 12) CHECK(brute_force_index(g) <= r.coloring.palette_size());
        }
        if (mad < Rational(3, 1) && done3 < 20) {
            ++done3;
            auto r = color_subcubic_mad(g, Ruleset::Mad3);
            CHECK(r.bound_claimed == 7);
            check_bound(g, r);
        }
    }
    CHECK(done83 >= 10);
    CHECK(done3 >= 10);
}

TEST_CASE("cycle with a pendant path under mad83") {
    // C5 plus a chord-free pendant path
    Graph g = Graph::build(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 7}});
    REQUIRE(mad_exact(g) < Rational(8, 3));
    auto r = color_subcubic_mad(g, Ruleset::Mad83);
    check_bound(g, r);
    CHECK(brute_force_index(g) <= r.coloring.palette_size());
}

TEST_CASE("mad preconditions are enforced") {
    CHECK_THROWS_WITH_AS((void)color_subcubic_mad(corpus_get("k4").graph, Ruleset::Mad73),
                         doctest::Contains("PreconditionViolated"), Error);
    // trust-mad on a 3-regular graph: the reduction must stall
    CHECK_THROWS_WITH_AS((void)color_subcubic_mad(corpus_get("petersen").graph, Ruleset::Mad3, true),
                         doctest::Contains("ReductionStalled"), Error);
}

TEST_CASE("outerplanar: fig3 needs exactly five colors") {
    const Graph& fig3 = corpus_get("fig3_outerplanar").graph;
    auto r = color_outerplanar_subcubic(fig3);
    CHECK(r.bound_claimed == 5);
    check_bound(fig3, r);
    CHECK(r.coloring.palette_size() == 5);
    CHECK_FALSE(strengthened_property_violation(fig3, r.coloring).has_value());
}

TEST_CASE("outerplanar base cases") {
    // two triangles sharing an edge: three colors
    Graph theta = Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    auto r = color_outerplanar_subcubic(theta);
    check_bound(theta, r);
    CHECK(r.coloring.palette_size() == 3);
    CHECK_FALSE(strengthened_property_violation(theta, r.coloring).has_value());

    auto c6 = color_outerplanar_subcubic(corpus_get("c6").graph);
    CHECK(c6.coloring.palette_size() == 3);
    CHECK_FALSE(strengthened_property_violation(corpus_get("c6").graph, c6.coloring).has_value());

    auto p9 = color_outerplanar_subcubic(corpus_get("p9").graph);
    check_bound(corpus_get("p9").graph, p9);
    CHECK_FALSE(strengthened_property_violation(corpus_get("p9").graph, p9.coloring).has_value());

    // odd cycles admit no strengthened coloring; the result is still valid
    auto c5 = color_outerplanar_subcubic(corpus_get("c5").graph);
    check_bound(corpus_get("c5").graph, c5);
    CHECK(c5.coloring.palette_size() == 3);
}

TEST_CASE("outerplanar handles polygon chains with the property") {
    Rng rng(58);
    for (int round = 0; round < 25; ++round) {
        Graph g = random_polygon_chain(1 + rng.below(4), rng);
        auto r = color_outerplanar_subcubic(g);
        check_bound(g, r);
        CHECK_FALSE(strengthened_property_violation(g, r.coloring).has_value());
        if (g.edge_count() <= 13) CHECK(injective_chromatic_index(g).index <= r.coloring.palette_size());
    }
}

TEST_CASE("outerplanar engine handles mixed constructions") {
    Rng rng(59);
    for (int round = 0; round < 150; ++round) {
        Graph g = random_outerplanar_subcubic(rng.below(6), rng);
        auto r = color_outerplanar_subcubic(g);
        CHECK(verify_injective(g, r.coloring).valid);
        CHECK(r.coloring.palette_size() <= 5);
        CHECK_FALSE(strengthened_property_violation(g, r.coloring).has_value());
        if (g.edge_count() <= 13) CHECK(injective_chromatic_index(g).index <= r.coloring.palette_size());
    }
}

TEST_CASE("outerplanar stalls on non-outerplanar inputs") {
    CHECK_THROWS_WITH_AS((void)color_outerplanar_subcubic(corpus_get("k4").graph),
                         doctest::Contains("ReductionStalled"), Error);
    CHECK_THROWS_WITH_AS((void)color_outerplanar_subcubic(corpus_get("k3_3").graph),
                         doctest::Contains("ReductionStalled"), Error);
    CHECK_THROWS_WITH_AS((void)color_outerplanar_subcubic(corpus_get("k4_7").graph),
                         doctest::Contains("DegreeTooLarge"), Error);
}

TEST_CASE("conjecture probe on a small budget") {
    auto report = conjecture_probe(false, 5, 8, 30, 7);
    CHECK(report.max_index == 6); // K4 and the prism sit in the corpus sweep
    CHECK_FALSE(report.over_theorem);
    CHECK(report.enumerated > 10);

    auto bip = conjecture_probe(true, 5, 8, 30, 7);
    CHECK(bip.max_index >= 5); // fig1 attains 5
    CHECK(bip.max_index <= 6);
    CHECK_FALSE(bip.over_theorem);
}

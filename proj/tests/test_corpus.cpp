#include "doctest.h"

#include <deque>
#include <set>

#include "inj/corpus.hpp"
#include "inj/mad.hpp"
#include "inj/solver.hpp"

using namespace inj;

namespace {

int diameter(const Graph& g) {
    int best = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
        std::deque<VertexId> queue{s};
        dist[static_cast<std::size_t>(s)] = 0;
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            best = std::max(best, dist[static_cast<std::size_t>(u)]);
            for (VertexId w : g.neighbors(u))
                if (dist[static_cast<std::size_t>(w)] == -1) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
        }
    }
    return best;
}

} // namespace

TEST_CASE("corpus listing and lookup") {
    auto names = corpus_list();
    CHECK(names.size() > 25);
    std::set<std::string> unique(names.begin(), names.end());
    CHECK(unique.size() == names.size());
    CHECK(corpus_get("petersen").graph.vertex_count() == 10);
    CHECK_THROWS_WITH_AS((void)corpus_get("zorp"), doctest::Contains("UnknownName"), Error);
}

TEST_CASE("structural assertions hold for every fixture") {
    for (const auto& name : corpus_list()) CHECK_NOTHROW(corpus_structural_check(corpus_get(name)));
}

TEST_CASE("heawood fixture facts") {
    const Graph& h = corpus_get("heawood").graph;
    CHECK(h.vertex_count() == 14);
    CHECK(h.edge_count() == 21);
    CHECK(h.girth() == std::optional<int>(6));
    CHECK(diameter(h) == 3);
}

TEST_CASE("fig2 has mad exactly two") {
    CHECK(corpus_get("fig2_sun").expected_mad == Rational(2, 1));
    CHECK(mad_exact(corpus_get("fig2_sun").graph) == Rational(2, 1));
}

TEST_CASE("small expected values are reproduced") {
    for (const auto& name : {"p5", "c8", "c6", "k1_3", "fig2_sun"}) {
        const auto& fixture = corpus_get(name);
        REQUIRE(fixture.expected_index.has_value());
        CHECK(brute_force_index(fixture.graph) == *fixture.expected_index);
    }
}

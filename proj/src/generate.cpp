#include "inj/generate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "inj/corpus.hpp"
#include "inj/io.hpp"
#include "inj/solver.hpp"

namespace inj {

int Rng::below(int bound) {
    if (bound <= 1) return 0;
    std::uint64_t span = static_cast<std::uint64_t>(bound);
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    for (;;) {
        std::uint64_t draw = state_();
        if (draw < limit) return static_cast<int>(draw % span);
    }
}

Graph random_graph(int n, int m, Rng& rng) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    m = std::min<int>(m, static_cast<int>(all.size()));
    // partial Fisher-Yates
    for (int i = 0; i < m; ++i) {
        int j = i + rng.below(static_cast<int>(all.size()) - i);
        std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]);
    }
    all.resize(static_cast<std::size_t>(m));
    return Graph::build(n, all);
}

Graph random_tree(int n, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rng.below(v), v);
    return Graph::build(n, edges);
}

Graph random_connected_subcubic(int n, int extra, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int v = 1; v < n; ++v) {
        std::vector<int> eligible;
        for (int u = 0; u < v; ++u)
            if (deg[static_cast<std::size_t>(u)] < 3) eligible.push_back(u);
        int u = eligible[static_cast<std::size_t>(rng.below(static_cast<int>(eligible.size())))];
        edges.emplace_back(u, v);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    std::set<std::pair<int, int>> have(edges.begin(), edges.end());
    for (int tries = 0; extra > 0 && tries < 40 * (extra + 1); ++tries) {
        int u = rng.below(n), v = rng.below(n);
        if (u == v) continue;
        auto key = std::minmax(u, v);
        if (have.count(key) || deg[static_cast<std::size_t>(u)] >= 3 || deg[static_cast<std::size_t>(v)] >= 3)
            continue;
        have.insert(key);
        edges.push_back(key);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
        --extra;
    }
    return Graph::build(n, edges);
}

Graph random_polygon_chain(int polygons, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg;
    auto add_vertex = [&] {
        deg.push_back(0);
        return static_cast<int>(deg.size()) - 1;
    };
    auto add_edge = [&](int u, int v) {
        edges.emplace_back(u, v);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    };
    // first polygon; keep a single polygon even so the strengthened property
    // remains achievable
    int len = 3 + rng.below(4);
    if (polygons == 1 && len % 2 == 1) ++len;
    std::vector<int> ring;
    for (int i = 0; i < len; ++i) ring.push_back(add_vertex());
    for (int i = 0; i < len; ++i) add_edge(ring[static_cast<std::size_t>(i)], ring[static_cast<std::size_t>((i + 1) % len)]);
    for (int p = 1; p < polygons; ++p) {
        // fuse the next polygon onto a free edge (both endpoints of degree 2)
        std::vector<std::pair<int, int>> free_edges;
        for (auto [u, v] : edges)
            if (deg[static_cast<std::size_t>(u)] == 2 && deg[static_cast<std::size_t>(v)] == 2)
                free_edges.emplace_back(u, v);
        if (free_edges.empty()) break;
        auto [u, v] = free_edges[static_cast<std::size_t>(rng.below(static_cast<int>(free_edges.size())))];
        // a triangle kills the freedom of up to three pool edges; longer
        // polygons always leave interior free edges behind
        int plen = free_edges.size() <= 3 ? 4 + rng.below(3) : 3 + rng.below(4);
        int prev = u;
        for (int i = 0; i < plen - 2; ++i) {
            int w = add_vertex();
            add_edge(prev, w);
            prev = w;
        }
        add_edge(prev, v);
    }
    return Graph::build(static_cast<int>(deg.size()), edges);
}

Graph random_outerplanar_subcubic(int ops, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg;
    auto add_vertex = [&] {
        deg.push_back(0);
        return static_cast<int>(deg.size()) - 1;
    };
    auto add_edge = [&](int u, int v) {
        edges.emplace_back(u, v);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    };
    auto add_cycle_at = [&](int attach, int len) {
        // attach may be -1 for a free-standing first cycle
        int first = attach == -1 ? add_vertex() : attach;
        int prev = first;
        for (int i = 1; i < len; ++i) {
            int w = add_vertex();
            add_edge(prev, w);
            prev = w;
        }
        add_edge(prev, first);
    };
    int first_len = 3 + rng.below(4);
    if (ops == 0 && first_len % 2 == 1) ++first_len; // a bare odd cycle admits no two-color windows
    add_cycle_at(-1, first_len);
    for (int op = 0; op < ops; ++op) {
        std::vector<int> low;
        for (int v = 0; v < static_cast<int>(deg.size()); ++v)
            if (deg[static_cast<std::size_t>(v)] <= 2) low.push_back(v);
        if (low.empty()) break;
        int kind = rng.below(3);
        if (kind == 0) {
            // pendant path
            int at = low[static_cast<std::size_t>(rng.below(static_cast<int>(low.size())))];
            int len = 1 + rng.below(3);
            for (int i = 0; i < len && deg[static_cast<std::size_t>(at)] <= 2; ++i) {
                int w = add_vertex();
                add_edge(at, w);
                at = w;
            }
        } else if (kind == 1) {
            // fuse a polygon onto a free edge
            std::vector<std::pair<int, int>> free_edges;
            for (auto [u, v] : edges)
                if (deg[static_cast<std::size_t>(u)] == 2 && deg[static_cast<std::size_t>(v)] == 2)
                    free_edges.emplace_back(u, v);
            if (free_edges.empty()) continue;
            auto [u, v] = free_edges[static_cast<std::size_t>(rng.below(static_cast<int>(free_edges.size())))];
            int plen = 3 + rng.below(4);
            int prev = u;
            for (int i = 0; i < plen - 2; ++i) {
                int w = add_vertex();
                add_edge(prev, w);
                prev = w;
            }
            add_edge(prev, v);
        } else {
            // tadpole arm ending in a fresh cycle
            int at = low[static_cast<std::size_t>(rng.below(static_cast<int>(low.size())))];
            int arm = 1 + rng.below(2);
            for (int i = 0; i < arm; ++i) {
                int w = add_vertex();
                add_edge(at, w);
                at = w;
            }
            add_cycle_at(at, 3 + rng.below(4));
        }
    }
    return Graph::build(static_cast<int>(deg.size()), edges);
}

namespace {

// Lexicographically maximal adjacency-row sequence over all orderings.
// Keeps the running maximum in `best` (-1 = unexplored suffix) and only
// descends along prefixes that tie it, improving in place.
struct CanonSearch {
    int n;
    std::vector<std::uint32_t> adj; // bitmask rows in input labels
    std::vector<std::int64_t> best;
    std::vector<int> perm;
    std::vector<int> candidate_order;

    explicit CanonSearch(const Graph& g) : n(g.vertex_count()) {
        adj.assign(static_cast<std::size_t>(n), 0);
        for (auto [u, v] : g.edges()) {
            adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
            adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
        }
        best.assign(static_cast<std::size_t>(n), -1);
        perm.assign(static_cast<std::size_t>(n), -1);
        for (int v = 0; v < n; ++v) candidate_order.push_back(v);
        std::stable_sort(candidate_order.begin(), candidate_order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    void search(int pos, std::vector<char>& placed) {
        if (pos == n) return;
        for (int v : candidate_order) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            std::int64_t row = 0;
            for (int q = 0; q < pos; ++q)
                if (adj[static_cast<std::size_t>(v)] >> perm[static_cast<std::size_t>(q)] & 1)
                    row |= std::int64_t{1} << q;
            if (row < best[static_cast<std::size_t>(pos)]) continue;
            if (row > best[static_cast<std::size_t>(pos)]) {
                best[static_cast<std::size_t>(pos)] = row;
                for (int q = pos + 1; q < n; ++q) best[static_cast<std::size_t>(q)] = -1;
            }
            perm[static_cast<std::size_t>(pos)] = v;
            placed[static_cast<std::size_t>(v)] = 1;
            search(pos + 1, placed);
            placed[static_cast<std::size_t>(v)] = 0;
        }
    }

    std::vector<std::uint32_t> run() {
        std::vector<char> placed(static_cast<std::size_t>(n), 0);
        search(0, placed);
        std::vector<std::uint32_t> out;
        for (std::int64_t r : best) out.push_back(static_cast<std::uint32_t>(r));
        return out;
    }
};

} // namespace

std::vector<std::uint32_t> canonical_certificate(const Graph& g) {
    if (g.vertex_count() == 0) return {};
    if (g.vertex_count() > 31) throw Error(Errc::TooLarge, "certificate limited to 31 vertices");
    CanonSearch cs(g);
    return cs.run();
}

std::vector<Graph> enumerate_connected_subcubic(int max_n) {
    std::vector<Graph> all;
    std::vector<Graph> current{Graph::build(1, {})};
    all.push_back(current.front());
    for (int n = 2; n <= max_n; ++n) {
        std::vector<Graph> next;
        std::set<std::vector<std::uint32_t>> seen;
        for (const Graph& parent : current) {
            std::vector<int> eligible;
            for (int v = 0; v < parent.vertex_count(); ++v)
                if (parent.degree(v) < 3) eligible.push_back(v);
            int k = static_cast<int>(eligible.size());
            for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
                if (__builtin_popcount(mask) > 3) continue;
                auto pairs = parent.edges();
                for (int i = 0; i < k; ++i)
                    if (mask >> i & 1) pairs.emplace_back(eligible[static_cast<std::size_t>(i)], n - 1);
                Graph child = Graph::build(n, pairs);
                auto cert = canonical_certificate(child);
                if (seen.insert(cert).second) next.push_back(std::move(child));
            }
        }
        for (const Graph& g : next) all.push_back(g);
        current = std::move(next);
    }
    return all;
}

ProbeReport conjecture_probe(bool bipartite_only, int enum_max_n, int sample_max_n, int count,
                             std::uint64_t seed) {
    ProbeReport report;
    report.bipartite_mode = bipartite_only;
    report.conjecture_ceiling = bipartite_only ? 5 : 6;

    auto consider = [&](const Graph& g, int* counter) {
        if (g.edge_count() == 0) return;
        if (bipartite_only && !bipartition(g)) return;
        if (counter) ++*counter;
        auto result = injective_chromatic_index(g);
        if (result.index > report.max_index) {
            report.max_index = result.index;
            report.max_graph6 = write_graph6(g);
        }
        if (result.index > report.conjecture_ceiling)
            report.over_conjecture.push_back({result.index, g.vertex_count(), write_graph6(g)});
        if (result.index > 8) report.over_theorem = true;
    };

    // Named fixtures first, then the exhaustive sweep, then samples.
    for (const auto& name : corpus_list()) {
        const NamedGraph& fixture = corpus_get(name);
        if (fixture.graph.edge_count() == 0 || fixture.graph.max_degree() > 3) continue;
        if (connected_components(fixture.graph).size() != 1) continue;
        consider(fixture.graph, &report.corpus_included);
    }
    if (enum_max_n >= 1)
        for (const Graph& g : enumerate_connected_subcubic(enum_max_n)) consider(g, &report.enumerated);
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
        int n = 4 + rng.below(std::max(1, sample_max_n - 3));
        Graph g = random_connected_subcubic(n, rng.below(std::max(2, n / 2)), rng);
        if (bipartite_only && !bipartition(g)) {
            // resample as a tree plus even-cycle-friendly edges: just retry a few times
            bool found = false;
            for (int attempt = 0; attempt < 20 && !found; ++attempt) {
                g = random_connected_subcubic(n, rng.below(std::max(2, n / 2)), rng);
                if (bipartition(g)) found = true;
            }
            if (!found) continue;
        }
        consider(g, &report.sampled);
    }
    return report;
}

} // namespace inj

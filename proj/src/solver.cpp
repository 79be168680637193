#include "inj/solver.hpp"

#include <algorithm>
#include <string>

namespace inj {

namespace {

// DSATUR backtracking over a fixed graph. Branches on the uncolored vertex
// with the most distinct neighbor colors (ties: higher degree, then lower
// id) and only tries colors up to one past the current maximum.
struct DsaturSearch {
    const Graph& g;
    int k;
    std::vector<int> color;                       // 0 = uncolored
    std::vector<std::vector<int>> neighbor_count; // [v][c-1] = colored neighbors with c

    DsaturSearch(const Graph& graph, int palette) : g(graph), k(palette) {
        color.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        neighbor_count.assign(static_cast<std::size_t>(g.vertex_count()), std::vector<int>(static_cast<std::size_t>(k), 0));
    }

    void assign(int v, int c) {
        color[static_cast<std::size_t>(v)] = c;
        for (int u : g.neighbors(v)) ++neighbor_count[static_cast<std::size_t>(u)][static_cast<std::size_t>(c - 1)];
    }
    void unassign(int v, int c) {
        color[static_cast<std::size_t>(v)] = 0;
        for (int u : g.neighbors(v)) --neighbor_count[static_cast<std::size_t>(u)][static_cast<std::size_t>(c - 1)];
    }

    int saturation(int v) const {
        int s = 0;
        for (int c = 0; c < k; ++c)
            if (neighbor_count[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] > 0) ++s;
        return s;
    }

    int pick_vertex() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (color[static_cast<std::size_t>(v)] != 0) continue;
            int s = saturation(v);
            int d = g.degree(v);
            if (s > best_sat || (s == best_sat && d > best_deg)) {
                best = v;
                best_sat = s;
                best_deg = d;
            }
        }
        return best;
    }

    bool solve(int colored, int max_used) {
        if (colored == g.vertex_count()) return true;
        int v = pick_vertex();
        if (saturation(v) >= k) return false;
        int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (neighbor_count[static_cast<std::size_t>(v)][static_cast<std::size_t>(c - 1)] > 0) continue;
            assign(v, c);
            if (solve(colored + 1, std::max(max_used, c))) return true;
            unassign(v, c);
        }
        return false;
    }
};

struct CliqueSearch {
    const Graph& g;
    long budget;
    std::vector<int> best, current;
    std::vector<int> order; // degree-descending

    CliqueSearch(const Graph& graph, long nodes) : g(graph), budget(nodes) {
        order.resize(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) order[static_cast<std::size_t>(v)] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    void run() {
        std::vector<int> candidates = order;
        expand(candidates);
    }

    void expand(const std::vector<int>& candidates) {
        if (budget-- <= 0) return;
        if (current.size() > best.size()) best = current;
        if (current.size() + candidates.size() <= best.size()) return;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (current.size() + (candidates.size() - i) <= best.size()) return;
            int v = candidates[i];
            std::vector<int> next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (g.has_edge(v, candidates[j])) next.push_back(candidates[j]);
            current.push_back(v);
            expand(next);
            current.pop_back();
        }
    }
};

// Pairwise must-differ matrix straight from the definition: enumerate every
// three consecutive edges (path of length 3, or triangle) and mark the two
// outer edges. Deliberately independent of edges_conflict.
std::vector<std::vector<char>> definitional_conflicts(const Graph& g) {
    int m = g.edge_count();
    std::vector<std::vector<char>> differ(static_cast<std::size_t>(m), std::vector<char>(static_cast<std::size_t>(m), 0));
    auto mark = [&](EdgeId e, EdgeId f) {
        differ[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)] = 1;
        differ[static_cast<std::size_t>(f)][static_cast<std::size_t>(e)] = 1;
    };
    // Paths x-a-b-y over every middle edge ab.
    for (EdgeId mid = 0; mid < m; ++mid) {
        auto [a, b] = g.edge(mid);
        for (auto [p, q] : {std::pair<VertexId, VertexId>{a, b}, {b, a}}) {
            for (EdgeId e1 : g.incident_edges(p)) {
                if (e1 == mid) continue;
                VertexId x = g.other_endpoint(e1, p);
                if (x == q) continue;
                for (EdgeId e3 : g.incident_edges(q)) {
                    if (e3 == mid) continue;
                    VertexId y = g.other_endpoint(e3, q);
                    if (y == p || y == x) continue;
                    mark(e1, e3);
                }
            }
        }
    }
    // Triangles: all three edges pairwise.
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.neighbors(u)) {
            if (v <= u) continue;
            for (VertexId w : g.neighbors(v)) {
                if (w <= v || !g.has_edge(u, w)) continue;
                EdgeId e1 = *g.edge_id(u, v), e2 = *g.edge_id(v, w), e3 = *g.edge_id(u, w);
                mark(e1, e2);
                mark(e2, e3);
                mark(e1, e3);
            }
        }
    return differ;
}

bool brute_color(const std::vector<std::vector<char>>& differ, std::vector<int>& colors, std::size_t next,
                 int k, int max_used) {
    if (next == colors.size()) return true;
    int limit = std::min(k, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
        bool ok = true;
        for (std::size_t prev = 0; prev < next; ++prev)
            if (differ[next][prev] && colors[prev] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        colors[next] = c;
        if (brute_color(differ, colors, next + 1, k, std::max(max_used, c))) return true;
    }
    colors[next] = 0;
    return false;
}

} // namespace

std::vector<int> max_clique(const Graph& g, long budget) {
    if (g.vertex_count() == 0) return {};
    CliqueSearch cs(g, budget);
    cs.run();
    std::sort(cs.best.begin(), cs.best.end());
    return cs.best;
}

std::vector<EdgeId> max_conflict_clique(const Graph& g, long budget) {
    return max_clique(conflict_graph(g).base, budget);
}

std::optional<std::vector<int>> proper_k_coloring(const Graph& g, int k) {
    if (k < 1) return std::nullopt;
    if (g.vertex_count() == 0) return std::vector<int>{};
    auto clique = max_clique(g, 50000);
    if (static_cast<int>(clique.size()) > k) return std::nullopt;
    DsaturSearch search(g, k);
    int c = 1;
    for (int v : clique) search.assign(v, c++);
    if (!search.solve(static_cast<int>(clique.size()), static_cast<int>(clique.size())))
        return std::nullopt;
    return search.color;
}

std::optional<EdgeColoring> is_k_colorable(const Graph& g, int k) {
    if (k < 1) throw Error(Errc::PreconditionViolated, "k must be positive");
    auto cg = conflict_graph(g);
    auto colors = proper_k_coloring(cg.base, k);
    if (!colors) return std::nullopt;
    EdgeColoring out;
    out.colors = std::move(*colors);
    return out;
}

SolveResult injective_chromatic_index(const Graph& g) {
    if (g.edge_count() == 0) throw Error(Errc::NoEdges, "index of an edgeless graph");
    auto cg = conflict_graph(g);
    SolveResult result;
    result.clique = max_clique(cg.base, 200000);
    int lower = std::max<int>(1, static_cast<int>(result.clique.size()));
    for (int k = lower; k <= g.edge_count(); ++k) {
        auto colors = proper_k_coloring(cg.base, k);
        if (colors) {
            result.index = k;
            result.coloring.colors = std::move(*colors);
            return result;
        }
    }
    throw Error(Errc::Internal, "no coloring up to m colors");
}

int brute_force_index(const Graph& g) {
    int m = g.edge_count();
    if (m == 0) throw Error(Errc::NoEdges, "index of an edgeless graph");
    if (m > 20) throw Error(Errc::TooLarge, "brute force guarded to 20 edges, got " + std::to_string(m));
    auto differ = definitional_conflicts(g);
    for (int k = 1; k <= m; ++k) {
        std::vector<int> colors(static_cast<std::size_t>(m), 0);
        if (brute_color(differ, colors, 0, k, 0)) return k;
    }
    throw Error(Errc::Internal, "unreachable");
}

} // namespace inj

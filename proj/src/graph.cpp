#include "inj/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace inj {

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) throw Error(Errc::VertexOutOfRange, "negative vertex count");
    Graph g;
    g.n_ = n;
    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    g.incident_.assign(static_cast<std::size_t>(n), {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(Errc::VertexOutOfRange,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw Error(Errc::DuplicateEdge,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") repeated");
        EdgeId id = static_cast<EdgeId>(g.edges_.size());
        g.edges_.emplace_back(u, v);
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
        g.incident_[static_cast<std::size_t>(u)].push_back(id);
        g.incident_[static_cast<std::size_t>(v)].push_back(id);
    }
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    const auto& a = adjacency_[static_cast<std::size_t>(u)];
    const auto& b = adjacency_[static_cast<std::size_t>(v)];
    const auto& probe = a.size() <= b.size() ? a : b;
    VertexId want = a.size() <= b.size() ? v : u;
    return std::find(probe.begin(), probe.end(), want) != probe.end();
}

std::optional<EdgeId> Graph::edge_id(VertexId u, VertexId v) const {
    for (EdgeId e : incident_[static_cast<std::size_t>(u)])
        if (other_endpoint(e, u) == v) return e;
    return std::nullopt;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
    return d;
}

int Graph::max_degree() const {
    if (n_ == 0) throw Error(Errc::EmptyGraph, "max_degree of empty graph");
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

int Graph::min_degree() const {
    if (n_ == 0) throw Error(Errc::EmptyGraph, "min_degree of empty graph");
    int best = degree(0);
    for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

std::optional<int> Graph::girth() const {
    // BFS from every vertex; a non-tree edge seen from root s closes a walk
    // of length dist[u]+dist[w]+1 which always contains a cycle no longer
    // than itself, and equality is reached for roots on a shortest cycle.
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(n_));
    std::vector<VertexId> parent(static_cast<std::size_t>(n_));
    for (int s = 0; s < n_; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<VertexId> queue{s};
        dist[static_cast<std::size_t>(s)] = 0;
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            for (VertexId w : neighbors(u)) {
                if (dist[static_cast<std::size_t>(w)] == -1) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue.push_back(w);
                } else if (parent[static_cast<std::size_t>(u)] != w && parent[static_cast<std::size_t>(w)] != u) {
                    int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

std::optional<Bipartition> bipartition(const Graph& g, std::vector<VertexId>* odd_cycle) {
    int n = g.vertex_count();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<VertexId> parent(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (side[static_cast<std::size_t>(s)] != -1) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::deque<VertexId> queue{s};
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            for (VertexId w : g.neighbors(u)) {
                if (side[static_cast<std::size_t>(w)] == -1) {
                    side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(u)];
                    parent[static_cast<std::size_t>(w)] = u;
                    queue.push_back(w);
                } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(u)]) {
                    if (odd_cycle) {
                        // Walk both BFS paths to their meeting point.
                        std::vector<VertexId> pu{u}, pw{w};
                        std::vector<char> on_pu(static_cast<std::size_t>(n), 0);
                        for (VertexId x = u; x != -1; x = parent[static_cast<std::size_t>(x)]) {
                            on_pu[static_cast<std::size_t>(x)] = 1;
                            if (x != u) pu.push_back(x);
                        }
                        VertexId meet = w;
                        while (!on_pu[static_cast<std::size_t>(meet)])
                            meet = parent[static_cast<std::size_t>(meet)];
                        std::vector<VertexId> cycle;
                        for (VertexId x = u; x != meet; x = parent[static_cast<std::size_t>(x)])
                            cycle.push_back(x);
                        cycle.push_back(meet);
                        std::vector<VertexId> tail;
                        for (VertexId x = w; x != meet; x = parent[static_cast<std::size_t>(x)])
                            tail.push_back(x);
                        std::reverse(tail.begin(), tail.end());
                        cycle.insert(cycle.end(), tail.begin(), tail.end());
                        *odd_cycle = cycle;
                    }
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition bp;
    for (int v = 0; v < n; ++v) {
        if (side[static_cast<std::size_t>(v)] == 0) {
            bp.side_a.push_back(v);
            bp.delta_a = std::max(bp.delta_a, g.degree(v));
        } else {
            bp.side_b.push_back(v);
            bp.delta_b = std::max(bp.delta_b, g.degree(v));
        }
    }
    return bp;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<VertexId>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::deque<VertexId> queue{s};
        comp[static_cast<std::size_t>(s)] = id;
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            out[static_cast<std::size_t>(id)].push_back(u);
            for (VertexId w : g.neighbors(u)) {
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = id;
                    queue.push_back(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool edges_conflict(const Graph& g, EdgeId e, EdgeId f) {
    if (e == f) throw Error(Errc::SameEdge, "edge " + std::to_string(e) + " compared with itself");
    auto [a1, a2] = g.edge(e);
    auto [b1, b2] = g.edge(f);
    int shared = (a1 == b1) + (a1 == b2) + (a2 == b1) + (a2 == b2);
    if (shared == 1) {
        // Adjacent edges conflict exactly when the third edge closes a triangle.
        VertexId common = (a1 == b1 || a1 == b2) ? a1 : a2;
        VertexId x = a1 == common ? a2 : a1;
        VertexId y = b1 == common ? b2 : b1;
        return g.has_edge(x, y);
    }
    // Disjoint: a middle edge between the endpoint sets makes a path of length 3.
    return g.has_edge(a1, b1) || g.has_edge(a1, b2) || g.has_edge(a2, b1) || g.has_edge(a2, b2);
}

ConflictGraph conflict_graph(const Graph& g) {
    int m = g.edge_count();
    std::vector<std::pair<int, int>> pairs;
    for (EdgeId e = 0; e < m; ++e)
        for (EdgeId f = e + 1; f < m; ++f)
            if (edges_conflict(g, e, f)) pairs.emplace_back(e, f);
    ConflictGraph cg;
    cg.base = Graph::build(m, pairs);
    cg.source_vertices = g.vertex_count();
    cg.source_edges = m;
    return cg;
}

} // namespace inj

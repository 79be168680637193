#ifndef INJ_GRAPH_HPP
#define INJ_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "inj/errors.hpp"

namespace inj {

using VertexId = int;
using EdgeId = int;

/// Immutable finite simple graph. Vertices are 0..n-1, edges carry dense
/// ids 0..m-1 in insertion order. Loops and duplicate edges are rejected
/// at construction.
class Graph {
public:
    Graph() = default;

    static Graph build(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

    const std::vector<VertexId>& neighbors(VertexId v) const {
        return adjacency_[static_cast<std::size_t>(v)];
    }
    /// Edge ids incident to v, in insertion order.
    const std::vector<EdgeId>& incident_edges(VertexId v) const {
        return incident_[static_cast<std::size_t>(v)];
    }

    bool has_edge(VertexId u, VertexId v) const;
    /// Edge id of uv if present.
    std::optional<EdgeId> edge_id(VertexId u, VertexId v) const;

    int degree(VertexId v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    std::vector<int> degrees() const;
    int max_degree() const;
    int min_degree() const;

    /// Length of a shortest cycle; nullopt for forests.
    std::optional<int> girth() const;

    /// Other endpoint of edge e as seen from v.
    VertexId other_endpoint(EdgeId e, VertexId v) const {
        auto [a, b] = edges_[static_cast<std::size_t>(e)];
        return v == a ? b : a;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::vector<EdgeId>> incident_;
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
    return Graph::build(n, pairs);
}

struct Bipartition {
    std::vector<VertexId> side_a;
    std::vector<VertexId> side_b;
    int delta_a = 0; // max degree over side_a, taken in the host graph
    int delta_b = 0;
};

/// Two-coloring by BFS, one component at a time; each component's lowest
/// vertex lands on side_a. On an odd cycle, returns nullopt and (when
/// requested) a cyclic vertex sequence witnessing it.
std::optional<Bipartition> bipartition(const Graph& g, std::vector<VertexId>* odd_cycle = nullptr);

/// Component vertex sets, each sorted, ordered by least vertex.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

/// True iff e and f are the end edges of some path of length 3 or lie in a
/// common triangle. Adjacent edges conflict only through a triangle.
bool edges_conflict(const Graph& g, EdgeId e, EdgeId f);

/// The graph G^(*): one vertex per source edge, adjacency = edges_conflict.
struct ConflictGraph {
    Graph base;          // vertices are source edge ids
    int source_vertices = 0;
    int source_edges = 0;
};

ConflictGraph conflict_graph(const Graph& g);

} // namespace inj

#endif

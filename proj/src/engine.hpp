#ifndef INJ_SRC_ENGINE_HPP
#define INJ_SRC_ENGINE_HPP

#include <optional>
#include <vector>

#include "inj/bounds.hpp"
#include "inj/graph.hpp"

namespace inj::engine {

// Live edge mask over a fixed host graph; the reduction engines peel edges
// forward and restore them backward during coloring extension.
struct Subgraph {
    const Graph& host;
    std::vector<char> present;
    std::vector<int> deg;

    explicit Subgraph(const Graph& g)
        : host(g), present(static_cast<std::size_t>(g.edge_count()), 1), deg(g.degrees()) {}

    bool has(EdgeId e) const { return present[static_cast<std::size_t>(e)] != 0; }
    int degree(VertexId v) const { return deg[static_cast<std::size_t>(v)]; }

    void remove(EdgeId e) {
        present[static_cast<std::size_t>(e)] = 0;
        auto [u, v] = host.edge(e);
        --deg[static_cast<std::size_t>(u)];
        --deg[static_cast<std::size_t>(v)];
    }
    void restore(EdgeId e) {
        present[static_cast<std::size_t>(e)] = 1;
        auto [u, v] = host.edge(e);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }

    int edges_remaining() const {
        int c = 0;
        for (char p : present) c += p;
        return c;
    }

    // Present neighbors of v via present edges, host insertion order.
    std::vector<VertexId> neighbors(VertexId v) const {
        std::vector<VertexId> out;
        for (EdgeId e : host.incident_edges(v))
            if (has(e)) out.push_back(host.other_endpoint(e, v));
        return out;
    }
    std::vector<EdgeId> incident(VertexId v) const {
        std::vector<EdgeId> out;
        for (EdgeId e : host.incident_edges(v))
            if (has(e)) out.push_back(e);
        return out;
    }

    // Degree inside H* (the graph with 1-vertices stripped).
    int star_degree(VertexId v) const {
        int c = 0;
        for (EdgeId e : host.incident_edges(v))
            if (has(e) && degree(host.other_endpoint(e, v)) >= 2) ++c;
        return c;
    }
    std::vector<VertexId> star_neighbors(VertexId v) const {
        std::vector<VertexId> out;
        for (EdgeId e : host.incident_edges(v)) {
            if (!has(e)) continue;
            VertexId w = host.other_endpoint(e, v);
            if (degree(w) >= 2) out.push_back(w);
        }
        return out;
    }
    // Edge to a degree-1 neighbor of v, if any (lowest edge id).
    std::optional<EdgeId> pendant_edge(VertexId v) const {
        for (EdgeId e : host.incident_edges(v))
            if (has(e) && degree(host.other_endpoint(e, v)) == 1) return e;
        return std::nullopt;
    }

    std::optional<EdgeId> present_edge_id(VertexId u, VertexId v) const {
        auto e = host.edge_id(u, v);
        if (e && has(*e)) return e;
        return std::nullopt;
    }

    // Conflict relation of the masked graph: mediating edges must be present.
    bool conflict(EdgeId e, EdgeId f) const {
        auto [a1, a2] = host.edge(e);
        auto [b1, b2] = host.edge(f);
        int shared = (a1 == b1) + (a1 == b2) + (a2 == b1) + (a2 == b2);
        if (shared == 1) {
            VertexId common = (a1 == b1 || a1 == b2) ? a1 : a2;
            VertexId x = a1 == common ? a2 : a1;
            VertexId y = b1 == common ? b2 : b1;
            return present_edge_id(x, y).has_value();
        }
        return present_edge_id(a1, b1) || present_edge_id(a1, b2) || present_edge_id(a2, b1) ||
               present_edge_id(a2, b2);
    }
};

struct Step {
    Configuration config;
    std::vector<std::vector<EdgeId>> groups;
    std::vector<EdgeId> recolor;
    // Fixed whole-component assignment tried before the group search
    // (path/cycle patterns); pairs of (edge, color).
    std::vector<std::pair<EdgeId, int>> script;
    bool property_exempt = false; // odd cycle component: no 2-color window coloring exists
};

struct Extender {
    Subgraph& sub;
    std::vector<int>& colors; // host edge colors, 0 = unset
    int palette;
    bool check_property;
    const std::vector<char>* exempt; // property-exempt edges, may be null
    long budget = 4'000'000;

    bool edge_valid(EdgeId e) const;
    bool windows_valid_around(EdgeId e) const;
    bool window_valid(EdgeId mid) const;
    bool assign_groups(const std::vector<std::vector<EdgeId>>& groups, std::size_t idx);
    bool full_check() const;
};

std::optional<Step> scan_mad(const Subgraph& sub, Ruleset rs);
std::optional<Step> scan_outerplanar(const Subgraph& sub);

} // namespace inj::engine

#endif

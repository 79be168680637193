#include <algorithm>
#include <deque>
#include <set>

#include "engine.hpp"

namespace inj {

namespace engine {

namespace {

using K = Configuration::Kind;

struct MaskedComponent {
    std::vector<VertexId> vertices; // sorted
    std::vector<EdgeId> edges;      // ascending
    int max_deg = 0;
    std::vector<VertexId> deg1, deg3;
};

std::vector<MaskedComponent> masked_components(const Subgraph& sub) {
    const Graph& g = sub.host;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<MaskedComponent> out;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<std::size_t>(s)] || sub.degree(s) == 0) continue;
        MaskedComponent comp;
        std::deque<VertexId> queue{s};
        seen[static_cast<std::size_t>(s)] = 1;
        std::set<EdgeId> edges;
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            comp.vertices.push_back(u);
            comp.max_deg = std::max(comp.max_deg, sub.degree(u));
            if (sub.degree(u) == 1) comp.deg1.push_back(u);
            if (sub.degree(u) == 3) comp.deg3.push_back(u);
            for (EdgeId e : sub.incident(u)) {
                edges.insert(e);
                VertexId w = g.other_endpoint(e, u);
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        std::sort(comp.deg1.begin(), comp.deg1.end());
        std::sort(comp.deg3.begin(), comp.deg3.end());
        comp.edges.assign(edges.begin(), edges.end());
        out.push_back(std::move(comp));
    }
    return out;
}

// Edge walk of a masked path or cycle component.
std::vector<EdgeId> masked_walk(const Subgraph& sub, const MaskedComponent& comp, bool* cycle) {
    VertexId start = comp.vertices.front();
    *cycle = comp.deg1.empty();
    if (!comp.deg1.empty()) start = comp.deg1.front();
    std::vector<EdgeId> order;
    VertexId at = start;
    EdgeId prev = -1;
    while (order.size() < comp.edges.size()) {
        for (EdgeId e : sub.incident(at))
            if (e != prev) {
                order.push_back(e);
                at = sub.host.other_endpoint(e, at);
                prev = e;
                break;
            }
    }
    return order;
}

std::vector<int> path_pattern(int m) {
    std::vector<int> out(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = (i % 4 < 2) ? 1 : 2;
    return out;
}

std::vector<int> cycle_pattern(int n) {
    std::vector<int> out;
    if (n == 3) return {1, 2, 3};
    int prefix = n % 4 == 0 ? n : (n % 4 == 1 ? n - 5 : (n % 4 == 2 ? n - 6 : n - 7));
    for (int i = 0; i < prefix; ++i) out.push_back(i % 4 < 2 ? 1 : 2);
    if (n % 4 == 1) out.insert(out.end(), {1, 1, 2, 2, 3});
    if (n % 4 == 2) out.insert(out.end(), {1, 1, 2, 2, 3, 3});
    if (n % 4 == 3) out.insert(out.end(), {1, 1, 2, 2, 1, 3, 3});
    return out;
}

Step base_component_step(const Subgraph& sub, const MaskedComponent& comp) {
    bool cycle = false;
    auto order = masked_walk(sub, comp, &cycle);
    Step s;
    s.config.kind = cycle ? K::CycleComponent : K::PathComponent;
    s.config.vertices = comp.vertices;
    s.config.remove_edges = order;
    auto pattern = cycle ? cycle_pattern(static_cast<int>(order.size()))
                         : path_pattern(static_cast<int>(order.size()));
    for (std::size_t i = 0; i < order.size(); ++i) s.script.emplace_back(order[i], pattern[i]);
    for (EdgeId e : order) s.groups.push_back({e});
    s.property_exempt = cycle && order.size() % 2 == 1 && order.size() > 3;
    return s;
}

Step whole_component_dfs_step(const Subgraph& sub, const MaskedComponent& comp, K kind,
                              std::vector<EdgeId> ordered_edges) {
    Step s;
    s.config.kind = kind;
    s.config.vertices = comp.vertices;
    s.config.remove_edges = std::move(ordered_edges);
    for (EdgeId e : s.config.remove_edges) s.groups.push_back({e});
    (void)sub;
    return s;
}

// BFS edge order from the lowest vertex; keeps the group search local.
std::vector<EdgeId> bfs_edge_order(const Subgraph& sub, const MaskedComponent& comp) {
    std::vector<EdgeId> order;
    std::set<EdgeId> used;
    std::deque<VertexId> queue{comp.vertices.front()};
    std::set<VertexId> seen{comp.vertices.front()};
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (EdgeId e : sub.incident(u)) {
            if (used.insert(e).second) order.push_back(e);
            VertexId w = sub.host.other_endpoint(e, u);
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    return order;
}

// Cycle-plus-pendant: pendant gets 2, the two cycle edges after the branch
// vertex get 1, the rest run 3,3,4,4,...
Step cycle_plus_pendant_step(const Subgraph& sub, const MaskedComponent& comp) {
    VertexId v2 = comp.deg3.front();
    EdgeId pendant = *sub.pendant_edge(v2);
    std::vector<EdgeId> cycle_order;
    VertexId at = v2;
    EdgeId prev = pendant;
    while (cycle_order.size() + 1 < comp.edges.size()) {
        for (EdgeId e : sub.incident(at))
            if (e != prev && e != pendant) {
                cycle_order.push_back(e);
                at = sub.host.other_endpoint(e, at);
                prev = e;
                break;
            }
    }
    Step s;
    s.config.kind = K::CyclePlusPendant;
    s.config.vertices = comp.vertices;
    s.script.emplace_back(cycle_order[0], 1);
    s.script.emplace_back(cycle_order[1], 1);
    s.script.emplace_back(pendant, 2);
    for (std::size_t i = 2; i < cycle_order.size(); ++i)
        s.script.emplace_back(cycle_order[i], ((i - 2) % 4 < 2) ? 3 : 4);
    for (auto& [e, c] : s.script) s.config.remove_edges.push_back(e);
    for (EdgeId e : s.config.remove_edges) s.groups.push_back({e});
    return s;
}

struct ChainRun {
    std::vector<VertexId> run; // degree-2 vertices in path order
    VertexId a0 = -1, a1 = -1; // anchors adjacent to run.front()/run.back()
};

std::vector<ChainRun> chain_runs(const Subgraph& sub) {
    const Graph& g = sub.host;
    std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<ChainRun> runs;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (visited[static_cast<std::size_t>(v)] || sub.degree(v) != 2) continue;
        // walk to one end of the maximal run of 2-vertices
        VertexId end = v, prev = -1;
        for (;;) {
            VertexId next = -1;
            for (VertexId w : sub.neighbors(end))
                if (w != prev && sub.degree(w) == 2) {
                    next = w;
                    break;
                }
            if (next == -1 || next == v) break; // next == v: all-2 cycle, handled as a base component
            prev = end;
            end = next;
        }
        ChainRun run;
        VertexId at = end, back = -1;
        for (;;) {
            run.run.push_back(at);
            visited[static_cast<std::size_t>(at)] = 1;
            VertexId next = -1;
            for (VertexId w : sub.neighbors(at))
                if (w != back && sub.degree(w) == 2) {
                    next = w;
                    break;
                }
            if (next == -1) break;
            back = at;
            at = next;
        }
        if (run.run.size() == 1) {
            auto nb = sub.neighbors(run.run.front());
            run.a0 = nb[0];
            run.a1 = nb.size() > 1 ? nb[1] : -1;
        } else {
            for (VertexId w : sub.neighbors(run.run.front()))
                if (w != run.run[1]) run.a0 = w;
            for (VertexId w : sub.neighbors(run.run.back()))
                if (w != run.run[run.run.size() - 2]) run.a1 = w;
        }
        runs.push_back(std::move(run));
    }
    std::sort(runs.begin(), runs.end(), [](const ChainRun& a, const ChainRun& b) {
        return *std::min_element(a.run.begin(), a.run.end()) < *std::min_element(b.run.begin(), b.run.end());
    });
    return runs;
}

Step chain_one_anchor_step(const Subgraph& sub, VertexId x, std::vector<VertexId> run) {
    // orient from the lower-id end
    if (run.front() > run.back()) std::reverse(run.begin(), run.end());
    std::size_t t = run.size();
    Step s;
    s.config.kind = K::ChainCycleOneAnchor;
    s.config.vertices.push_back(x);
    for (VertexId c : run) s.config.vertices.push_back(c);
    if (t == 2) {
        EdgeId inner = *sub.present_edge_id(run[0], run[1]);
        EdgeId xc2 = *sub.present_edge_id(x, run[1]);
        s.config.remove_edges = {inner};
        s.recolor = {xc2};
        s.groups = {{xc2}, {inner}};
    } else {
        EdgeId xc1 = *sub.present_edge_id(x, run.front());
        EdgeId xct = *sub.present_edge_id(x, run.back());
        std::vector<EdgeId> inner;
        for (std::size_t i = 0; i + 1 < t; ++i) inner.push_back(*sub.present_edge_id(run[i], run[i + 1]));
        s.config.remove_edges = inner;
        s.recolor = {xc1, xct};
        s.groups.push_back({xc1});
        s.groups.push_back({xct});
        s.groups.push_back({inner.back()});
        for (std::size_t i = 0; i + 1 < inner.size(); ++i) s.groups.push_back({inner[i]});
    }
    return s;
}

Step chain_two_anchors_step(const Subgraph& sub, VertexId a0, VertexId a1, std::vector<VertexId> run) {
    VertexId x = std::min(a0, a1), y = std::max(a0, a1);
    if (a0 != x) std::reverse(run.begin(), run.end());
    Step s;
    s.config.kind = K::ChainCycleTwoAnchors;
    s.config.vertices.push_back(x);
    for (VertexId c : run) s.config.vertices.push_back(c);
    s.config.vertices.push_back(y);
    s.config.remove_edges.push_back(*sub.present_edge_id(x, run.front()));
    for (std::size_t i = 0; i + 1 < run.size(); ++i)
        s.config.remove_edges.push_back(*sub.present_edge_id(run[i], run[i + 1]));
    s.config.remove_edges.push_back(*sub.present_edge_id(run.back(), y));
    for (EdgeId e : s.config.remove_edges) s.groups.push_back({e});
    return s;
}

Step theta_step(const Subgraph& sub, const MaskedComponent& comp, VertexId x, VertexId y) {
    // component = edge xy plus two chains of 2-vertices between x and y
    std::vector<EdgeId> order{*sub.present_edge_id(x, y)};
    for (VertexId first : sub.neighbors(x)) {
        if (first == y) continue;
        VertexId at = first, prev = x;
        order.push_back(*sub.present_edge_id(x, first));
        while (at != y) {
            for (VertexId w : sub.neighbors(at))
                if (w != prev) {
                    order.push_back(*sub.present_edge_id(at, w));
                    prev = at;
                    at = w;
                    break;
                }
        }
    }
    return whole_component_dfs_step(sub, comp, K::ThetaComponent, std::move(order));
}

} // namespace

std::optional<Step> scan_outerplanar(const Subgraph& sub) {
    auto comps = masked_components(sub);
    if (comps.empty()) return std::nullopt;
    // (a) path and cycle components
    for (const auto& comp : comps)
        if (comp.max_deg <= 2) return base_component_step(sub, comp);
    // (b) lowest degree-1 vertex
    VertexId v1 = -1;
    for (const auto& comp : comps)
        if (!comp.deg1.empty() && (v1 == -1 || comp.deg1.front() < v1)) v1 = comp.deg1.front();
    if (v1 != -1) {
        const MaskedComponent* owner = nullptr;
        for (const auto& cand : comps)
            if (std::binary_search(cand.vertices.begin(), cand.vertices.end(), v1)) owner = &cand;
        VertexId v2 = sub.neighbors(v1).front();
        if (sub.degree(v2) >= 3) {
            if (owner->deg3.size() == 1) {
                if (owner->edges.size() == owner->vertices.size())
                    return cycle_plus_pendant_step(sub, *owner);
                return whole_component_dfs_step(sub, *owner, K::TreeComponent, bfs_edge_order(sub, *owner));
            }
            Step s;
            s.config.kind = K::PendantEdgeAtBranch;
            s.config.vertices = {v1, v2};
            s.config.remove_edges = {*sub.present_edge_id(v1, v2)};
            s.groups = {{s.config.remove_edges[0]}};
            return s;
        }
        // maximal simple path v1 v2 ... v_k, d(v_k) = 3
        std::vector<VertexId> path{v1, v2};
        VertexId prev = v1, at = v2;
        while (sub.degree(at) == 2) {
            for (VertexId w : sub.neighbors(at))
                if (w != prev) {
                    prev = at;
                    at = w;
                    break;
                }
            path.push_back(at);
        }
        Step s;
        s.config.kind = K::PendantSimplePath;
        s.config.vertices = path;
        std::size_t k = path.size();
        for (std::size_t i = 0; i + 2 < k; ++i)
            s.config.remove_edges.push_back(*sub.present_edge_id(path[i], path[i + 1]));
        // extend from the attachment side back toward the pendant
        for (auto it = s.config.remove_edges.rbegin(); it != s.config.remove_edges.rend(); ++it)
            s.groups.push_back({*it});
        return s;
    }
    // (c) chain cycles (Lemma MR)
    auto runs = chain_runs(sub);
    for (const auto& run : runs) {
        if (run.a0 == -1 || run.a1 == -1) continue;
        if (run.a0 == run.a1) {
            if (run.run.size() >= 2) return chain_one_anchor_step(sub, run.a0, run.run);
            continue;
        }
        if (!sub.present_edge_id(run.a0, run.a1)) continue;
        const MaskedComponent* owner = nullptr;
        for (const auto& cand : comps)
            if (std::binary_search(cand.vertices.begin(), cand.vertices.end(), run.a0)) owner = &cand;
        if (owner->deg3.size() == 2) return theta_step(sub, *owner, std::min(run.a0, run.a1), std::max(run.a0, run.a1));
        return chain_two_anchors_step(sub, run.a0, run.a1, run.run);
    }
    return std::nullopt;
}

} // namespace engine

BoundResult color_outerplanar_subcubic(const Graph& g, ReductionTrace* trace_out) {
    if (g.vertex_count() > 0 && g.edge_count() > 0 && g.max_degree() > 3)
        throw Error(Errc::DegreeTooLarge, "max degree exceeds 3");

    BoundResult r;
    r.method = "outerplanar";
    r.bound_claimed = 5;
    r.coloring.colors.assign(static_cast<std::size_t>(g.edge_count()), 0);
    if (g.edge_count() == 0) return r;

    engine::Subgraph sub(g);
    std::vector<engine::Step> steps;
    std::vector<char> exempt(static_cast<std::size_t>(g.edge_count()), 0);
    while (auto step = engine::scan_outerplanar(sub)) {
        if (step->property_exempt)
            for (EdgeId e : step->config.remove_edges) exempt[static_cast<std::size_t>(e)] = 1;
        for (EdgeId e : step->config.remove_edges) sub.remove(e);
        steps.push_back(std::move(*step));
    }
    if (sub.edges_remaining() > 0)
        throw Error(Errc::ReductionStalled, "chain-cycle reductions never applied; input is not outerplanar");

    std::vector<int> colors(static_cast<std::size_t>(g.edge_count()), 0);
    engine::Extender ext{sub, colors, 5, true, &exempt};

    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        for (EdgeId e : it->config.remove_edges) sub.restore(e);
        for (EdgeId e : it->recolor) colors[static_cast<std::size_t>(e)] = 0;
        for (EdgeId e : it->config.remove_edges) colors[static_cast<std::size_t>(e)] = 0;
        bool done = false;
        if (!it->script.empty()) {
            for (auto [e, c] : it->script) colors[static_cast<std::size_t>(e)] = c;
            done = ext.full_check();
            if (!done)
                for (auto [e, c] : it->script) colors[static_cast<std::size_t>(e)] = 0;
        }
        if (!done && !ext.assign_groups(it->groups, 0))
            throw Error(Errc::ReductionStalled,
                        std::string("extension failed at ") + kind_name(it->config.kind) +
                            "; input is not outerplanar");
        if (!ext.full_check()) throw Error(Errc::Internal, "partial coloring check failed mid-replay");
    }

    if (trace_out) {
        trace_out->steps.clear();
        for (auto& s : steps) trace_out->steps.push_back({s.config, s.groups, s.recolor});
    }
    r.coloring.colors = std::move(colors);
    auto verdict = verify_injective(g, r.coloring);
    if (!verdict.valid) throw Error(Errc::Internal, "outerplanar coloring invalid");
    if (r.coloring.palette_size() > 5) throw Error(Errc::Internal, "outerplanar palette exceeded 5");
    return r;
}

} // namespace inj

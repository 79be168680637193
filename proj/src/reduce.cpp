#include <algorithm>
#include <set>

#include "engine.hpp"
#include "inj/mad.hpp"

namespace inj {

const char* kind_name(Configuration::Kind k) {
    using K = Configuration::Kind;
    switch (k) {
    case K::WeakTwoVertex: return "weak-2-vertex";
    case K::ThreeVertexTwoOnes: return "3-vertex-two-1-neighbors";
    case K::TriangleTwoTwos: return "triangle-two-2-vertices";
    case K::FourCycleThreeTwos: return "4-cycle-three-2-vertices";
    case K::PathThreeTwos: return "path-three-2-vertices";
    case K::BranchThreeTwos: return "3-vertex-three-2-neighbors";
    case K::OneVertex: return "1-vertex";
    case K::AdjacentTwoVertices: return "adjacent-2-vertices";
    case K::ThreeVertexTwoTwos: return "3-vertex-two-2-neighbors";
    case K::TwoVertex: return "2-vertex";
    case K::PathComponent: return "path-component";
    case K::CycleComponent: return "cycle-component";
    case K::TreeComponent: return "tree-component";
    case K::CyclePlusPendant: return "cycle-plus-pendant";
    case K::ThetaComponent: return "two-cycles-sharing-an-edge";
    case K::PendantEdgeAtBranch: return "pendant-edge-at-3-vertex";
    case K::PendantSimplePath: return "pendant-simple-path";
    case K::ChainCycleOneAnchor: return "chain-cycle-one-anchor";
    case K::ChainCycleTwoAnchors: return "chain-cycle-two-anchors";
    }
    return "unknown";
}

namespace engine {

bool Extender::edge_valid(EdgeId e) const {
    int c = colors[static_cast<std::size_t>(e)];
    for (EdgeId f = 0; f < sub.host.edge_count(); ++f) {
        if (f == e || !sub.has(f) || colors[static_cast<std::size_t>(f)] != c) continue;
        if (sub.conflict(e, f)) return false;
    }
    return true;
}

bool Extender::window_valid(EdgeId mid) const {
    if (!sub.has(mid)) return true;
    if (exempt && (*exempt)[static_cast<std::size_t>(mid)]) return true;
    auto [x, y] = sub.host.edge(mid);
    if (sub.degree(x) != 2 || sub.degree(y) != 2) return true;
    EdgeId a = -1, b = -1;
    for (EdgeId e : sub.incident(x))
        if (e != mid) a = e;
    for (EdgeId e : sub.incident(y))
        if (e != mid) b = e;
    if (sub.host.other_endpoint(a, x) == sub.host.other_endpoint(b, y)) return true; // triangle
    int ca = colors[static_cast<std::size_t>(a)], cm = colors[static_cast<std::size_t>(mid)],
        cb = colors[static_cast<std::size_t>(b)];
    if (ca == 0 || cm == 0 || cb == 0) return true; // incomplete, checked later
    int distinct = 1 + (cm != ca) + (cb != ca && cb != cm);
    return distinct == 2;
}

bool Extender::windows_valid_around(EdgeId e) const {
    if (!window_valid(e)) return false;
    auto [u, v] = sub.host.edge(e);
    for (VertexId z : {u, v})
        for (EdgeId f : sub.incident(z))
            if (f != e && !window_valid(f)) return false;
    return true;
}

bool Extender::assign_groups(const std::vector<std::vector<EdgeId>>& groups, std::size_t idx) {
    if (idx == groups.size()) return true;
    for (int c = 1; c <= palette; ++c) {
        if (--budget <= 0)
            throw Error(Errc::ReductionStalled, "extension search budget exhausted");
        for (EdgeId e : groups[idx]) colors[static_cast<std::size_t>(e)] = c;
        bool ok = true;
        for (EdgeId e : groups[idx])
            if (!edge_valid(e) || (check_property && !windows_valid_around(e))) {
                ok = false;
                break;
            }
        if (ok && assign_groups(groups, idx + 1)) return true;
        for (EdgeId e : groups[idx]) colors[static_cast<std::size_t>(e)] = 0;
    }
    return false;
}

bool Extender::full_check() const {
    int m = sub.host.edge_count();
    for (EdgeId e = 0; e < m; ++e) {
        if (!sub.has(e)) continue;
        if (colors[static_cast<std::size_t>(e)] < 1) return false;
        for (EdgeId f = e + 1; f < m; ++f) {
            if (!sub.has(f) || colors[static_cast<std::size_t>(e)] != colors[static_cast<std::size_t>(f)]) continue;
            if (sub.conflict(e, f)) return false;
        }
        if (check_property && !window_valid(e)) return false;
    }
    return true;
}

namespace {

using K = Configuration::Kind;

Step make_step(K kind, std::vector<VertexId> roles, std::vector<std::vector<EdgeId>> groups) {
    Step s;
    s.config.kind = kind;
    s.config.vertices = std::move(roles);
    std::set<EdgeId> seen;
    for (auto& grp : groups) {
        std::vector<EdgeId> filtered;
        for (EdgeId e : grp)
            if (seen.insert(e).second) filtered.push_back(e);
        grp = filtered;
        for (EdgeId e : grp) s.config.remove_edges.push_back(e);
    }
    for (auto& grp : groups)
        if (!grp.empty()) s.groups.push_back(grp);
    return s;
}

std::optional<Step> scan_mad73(const Subgraph& sub) {
    const Graph& g = sub.host;
    int n = g.vertex_count();
    // 1. weak 2-vertex
    for (VertexId u = 0; u < n; ++u) {
        if (sub.degree(u) != 2) continue;
        if (auto pend = sub.pendant_edge(u))
            return make_step(K::WeakTwoVertex, {u, g.other_endpoint(*pend, u)}, {{*pend}});
    }
    // 2. 3-vertex with two 1-neighbors
    for (VertexId u = 0; u < n; ++u) {
        if (sub.degree(u) != 3) continue;
        std::vector<EdgeId> pendants;
        for (EdgeId e : sub.incident(u))
            if (sub.degree(g.other_endpoint(e, u)) == 1) pendants.push_back(e);
        if (pendants.size() >= 2)
            return make_step(K::ThreeVertexTwoOnes, {u, g.other_endpoint(pendants[0], u)}, {{pendants[0]}});
    }
    auto star2 = [&](VertexId v) { return sub.degree(v) >= 2 && sub.star_degree(v) == 2; };
    // 3. triangle uvw with two H*-2-vertices
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!sub.has(e)) continue;
        auto [v, w] = g.edge(e);
        if (!star2(v) || !star2(w)) continue;
        for (VertexId u = 0; u < n; ++u) {
            if (u == v || u == w || sub.degree(u) < 2) continue;
            auto uv = sub.present_edge_id(u, v), uw = sub.present_edge_id(u, w);
            if (!uv || !uw) continue;
            std::vector<std::vector<EdgeId>> groups{{*uv}, {*uw}, {e}};
            if (auto p = sub.pendant_edge(v)) groups.push_back({*p});
            if (auto p = sub.pendant_edge(w)) groups.push_back({*p});
            return make_step(K::TriangleTwoTwos, {u, v, w}, std::move(groups));
        }
    }
    // 4. 4-cycle x-u-v-w-x with three H*-2-vertices
    for (VertexId v = 0; v < n; ++v) {
        if (!star2(v)) continue;
        auto nb = sub.star_neighbors(v);
        VertexId u = nb[0], w = nb[1];
        if (!star2(u) || !star2(w)) continue;
        auto other_star = [&](VertexId s, VertexId avoid) -> VertexId {
            for (VertexId t : sub.star_neighbors(s))
                if (t != avoid) return t;
            return -1;
        };
        VertexId x = other_star(u, v), x2 = other_star(w, v);
        if (x == -1 || x != x2 || x == u || x == v || x == w) continue;
        EdgeId xu = *sub.present_edge_id(x, u), uv = *sub.present_edge_id(u, v), vw = *sub.present_edge_id(v, w);
        std::vector<std::vector<EdgeId>> groups{{xu}, {uv}};
        if (auto p = sub.pendant_edge(v)) groups.push_back({*p});
        if (auto p = sub.pendant_edge(u)) groups.push_back({*p});
        groups.push_back({vw});
        return make_step(K::FourCycleThreeTwos, {x, u, v, w}, std::move(groups));
    }
    // 5. path x-u-v-w-y with three H*-2-vertices
    for (VertexId v = 0; v < n; ++v) {
        if (!star2(v)) continue;
        auto nb = sub.star_neighbors(v);
        VertexId u = nb[0], w = nb[1];
        if (!star2(u) || !star2(w)) continue;
        auto other_star = [&](VertexId s, VertexId avoid) -> VertexId {
            for (VertexId t : sub.star_neighbors(s))
                if (t != avoid) return t;
            return -1;
        };
        VertexId x = other_star(u, v), y = other_star(w, v);
        if (x == -1 || y == -1 || x == y || x == w || y == u) continue;
        EdgeId uv = *sub.present_edge_id(u, v), vw = *sub.present_edge_id(v, w);
        std::vector<std::vector<EdgeId>> groups{{uv}, {vw}};
        if (auto p = sub.pendant_edge(v)) groups.push_back({*p});
        if (auto p = sub.pendant_edge(w)) groups.push_back({*p});
        if (auto p = sub.pendant_edge(u)) groups.push_back({*p});
        return make_step(K::PathThreeTwos, {x, u, v, w, y}, std::move(groups));
    }
    // 6. 3-vertex with three 2-neighbors, two of them with 2-neighbors
    for (VertexId u = 0; u < n; ++u) {
        if (sub.degree(u) != 3 || sub.star_degree(u) != 3) continue;
        auto nb = sub.star_neighbors(u);
        if (nb.size() != 3) continue;
        bool all2 = true;
        for (VertexId s : nb) all2 = all2 && star2(s);
        if (!all2) continue;
        auto far_of = [&](VertexId s) -> VertexId {
            for (VertexId t : sub.star_neighbors(s))
                if (t != u) return t;
            return -1;
        };
        std::vector<VertexId> qualifying, rest;
        for (VertexId s : nb) {
            VertexId f = far_of(s);
            if (f != -1 && sub.degree(f) >= 2 && sub.star_degree(f) == 2)
                qualifying.push_back(s);
            else
                rest.push_back(s);
        }
        if (qualifying.size() < 2) continue;
        VertexId z = qualifying[0], y = qualifying[1];
        VertexId x = qualifying.size() == 3 ? qualifying[2] : rest[0];
        VertexId x1 = far_of(x), y1 = far_of(y), z1 = far_of(z);
        if (x1 == -1) continue;
        std::set<VertexId> core{x, y, z};
        if (core.count(x1) || core.count(y1) || core.count(z1)) continue;
        std::vector<std::vector<EdgeId>> groups;
        groups.push_back({*sub.present_edge_id(u, x), *sub.present_edge_id(u, y), *sub.present_edge_id(u, z)});
        auto chain = [&](VertexId s, VertexId s1) {
            std::vector<EdgeId> grp;
            if (auto p = sub.pendant_edge(s1)) grp.push_back(*p);
            grp.push_back(*sub.present_edge_id(s, s1));
            return grp;
        };
        groups.push_back(chain(z, z1));
        groups.push_back(chain(y, y1));
        groups.push_back(chain(x, x1));
        for (VertexId s : {z, y, x})
            if (auto p = sub.pendant_edge(s)) groups.push_back({*p});
        return make_step(K::BranchThreeTwos, {u, x, y, z, x1, y1, z1}, std::move(groups));
    }
    return std::nullopt;
}

std::optional<Step> scan_mad83(const Subgraph& sub) {
    const Graph& g = sub.host;
    int n = g.vertex_count();
    for (VertexId u = 0; u < n; ++u)
        if (sub.degree(u) == 1) {
            EdgeId e = sub.incident(u)[0];
            return make_step(K::OneVertex, {u, g.other_endpoint(e, u)}, {{e}});
        }
    for (VertexId u = 0; u < n; ++u) {
        if (sub.degree(u) != 2) continue;
        for (EdgeId e : sub.incident(u)) {
            VertexId v = g.other_endpoint(e, u);
            if (sub.degree(v) != 2) continue;
            EdgeId vw = -1;
            for (EdgeId f : sub.incident(v))
                if (f != e) vw = f;
            return make_step(K::AdjacentTwoVertices, {u, v}, {{e}, {vw}});
        }
    }
    for (VertexId u = 0; u < n; ++u) {
        if (sub.degree(u) != 3) continue;
        std::vector<VertexId> twos;
        for (VertexId s : sub.neighbors(u))
            if (sub.degree(s) == 2) twos.push_back(s);
        if (twos.size() < 2) continue;
        VertexId v = twos[0], w = twos[1];
        auto far_edge = [&](VertexId s) {
            for (EdgeId f : sub.incident(s))
                if (g.other_endpoint(f, s) != u) return f;
            return EdgeId{-1};
        };
        EdgeId vy = far_edge(v), wz = far_edge(w);
        return make_step(K::ThreeVertexTwoTwos, {u, v, w},
                         {{vy}, {wz}, {*sub.present_edge_id(u, v)}, {*sub.present_edge_id(u, w)}});
    }
    return std::nullopt;
}

std::optional<Step> scan_mad3(const Subgraph& sub) {
    const Graph& g = sub.host;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        if (sub.degree(u) == 1) {
            EdgeId e = sub.incident(u)[0];
            return make_step(K::OneVertex, {u, g.other_endpoint(e, u)}, {{e}});
        }
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        if (sub.degree(u) == 2) {
            auto inc = sub.incident(u);
            return make_step(K::TwoVertex, {u}, {{inc[0]}, {inc[1]}});
        }
    return std::nullopt;
}

} // namespace

std::optional<Step> scan_mad(const Subgraph& sub, Ruleset rs) {
    switch (rs) {
    case Ruleset::Mad73: return scan_mad73(sub);
    case Ruleset::Mad83: return scan_mad83(sub);
    case Ruleset::Mad3: return scan_mad3(sub);
    default: throw Error(Errc::Internal, "mad scan with outerplanar ruleset");
    }
}

} // namespace engine

std::optional<Configuration> find_reducible_configuration(const Graph& g, Ruleset rs) {
    engine::Subgraph sub(g);
    auto step = rs == Ruleset::Outerplanar ? engine::scan_outerplanar(sub) : engine::scan_mad(sub, rs);
    if (!step) return std::nullopt;
    return step->config;
}

namespace {

BoundResult finish_mad(const Graph& g, Ruleset threshold, EdgeColoring coloring) {
    BoundResult r;
    r.method = threshold == Ruleset::Mad73 ? "mad73" : (threshold == Ruleset::Mad83 ? "mad83" : "mad3");
    r.bound_claimed = threshold == Ruleset::Mad73 ? 4 : (threshold == Ruleset::Mad83 ? 6 : 7);
    r.coloring = std::move(coloring);
    auto verdict = verify_injective(g, r.coloring);
    if (!verdict.valid) throw Error(Errc::Internal, r.method + " produced an invalid coloring");
    if (r.coloring.palette_size() > r.bound_claimed)
        throw Error(Errc::Internal, r.method + " exceeded its palette");
    return r;
}

} // namespace

BoundResult color_subcubic_mad(const Graph& g, Ruleset threshold, bool trust_mad, ReductionTrace* trace_out) {
    if (threshold == Ruleset::Outerplanar)
        throw Error(Errc::PreconditionViolated, "use color_outerplanar_subcubic for the outerplanar ruleset");
    if (g.vertex_count() > 0 && g.edge_count() > 0 && g.max_degree() > 3)
        throw Error(Errc::PreconditionViolated, "max degree exceeds 3");
    Rational limit = threshold == Ruleset::Mad73 ? Rational(7, 3)
                                                 : (threshold == Ruleset::Mad83 ? Rational(8, 3) : Rational(3, 1));
    if (!trust_mad && g.vertex_count() > 0) {
        Rational mad = mad_exact(g);
        if (!(mad < limit))
            throw Error(Errc::PreconditionViolated, "mad(G) = " + mad.str() + " is not below " + limit.str());
    }
    if (g.edge_count() == 0) return finish_mad(g, threshold, EdgeColoring{});

    // Degree <= 2 inputs route to the exact path/cycle and tree schemes.
    if (g.max_degree() <= 2) {
        EdgeColoring coloring;
        if (!g.girth().has_value()) {
            coloring = color_tree(g).coloring;
        } else {
            coloring.colors.assign(static_cast<std::size_t>(g.edge_count()), 0);
            for (const auto& comp : connected_components(g)) {
                if (comp.size() < 2) continue;
                auto view_colors = color_path_or_cycle(
                    [&] {
                        std::vector<std::pair<int, int>> pairs;
                        std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
                        for (std::size_t i = 0; i < comp.size(); ++i) local[static_cast<std::size_t>(comp[i])] = static_cast<int>(i);
                        for (EdgeId e = 0; e < g.edge_count(); ++e) {
                            auto [u, v] = g.edge(e);
                            if (local[static_cast<std::size_t>(u)] != -1 && local[static_cast<std::size_t>(v)] != -1)
                                pairs.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
                        }
                        return Graph::build(static_cast<int>(comp.size()), pairs);
                    }());
                // map back: component edges appear in the same relative order
                std::size_t k = 0;
                for (EdgeId e = 0; e < g.edge_count(); ++e) {
                    auto [u, v] = g.edge(e);
                    bool inside = std::binary_search(comp.begin(), comp.end(), u);
                    if (inside) coloring.colors[static_cast<std::size_t>(e)] = view_colors.coloring.colors[k++];
                }
            }
        }
        return finish_mad(g, threshold, std::move(coloring));
    }

    engine::Subgraph sub(g);
    std::vector<engine::Step> steps;
    while (auto step = engine::scan_mad(sub, threshold)) {
        for (EdgeId e : step->config.remove_edges) sub.remove(e);
        steps.push_back(std::move(*step));
    }

    std::vector<int> colors(static_cast<std::size_t>(g.edge_count()), 0);
    int palette = threshold == Ruleset::Mad73 ? 4 : (threshold == Ruleset::Mad83 ? 6 : 7);
    engine::Extender ext{sub, colors, palette, false, nullptr};

    // Base case: whatever remains must be conflict-free (isolated edges).
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (sub.has(e)) colors[static_cast<std::size_t>(e)] = 1;
    if (!ext.full_check())
        throw Error(Errc::ReductionStalled,
                    "no configuration applies to a non-trivial remainder; mad precondition violated");

    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        for (EdgeId e : it->config.remove_edges) sub.restore(e);
        for (EdgeId e : it->config.remove_edges) colors[static_cast<std::size_t>(e)] = 0;
        if (!ext.assign_groups(it->groups, 0))
            throw Error(Errc::ReductionStalled,
                        std::string("extension failed at ") + kind_name(it->config.kind));
        if (!ext.full_check()) throw Error(Errc::Internal, "partial coloring check failed mid-replay");
    }

    if (trace_out) {
        trace_out->steps.clear();
        for (auto& s : steps) trace_out->steps.push_back({s.config, s.groups, s.recolor});
    }
    EdgeColoring coloring;
    coloring.colors = std::move(colors);
    return finish_mad(g, threshold, std::move(coloring));
}

} // namespace inj

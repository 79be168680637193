#include "inj/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace inj {

namespace {

template <typename T>
int distinct_count(const std::vector<T>& xs) {
    std::set<T> s(xs.begin(), xs.end());
    return static_cast<int>(s.size());
}

void require_total(const Graph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.edge_count())
        throw Error(Errc::PartialColoring, "coloring covers " + std::to_string(c.colors.size()) +
                                               " of " + std::to_string(g.edge_count()) + " edges");
    for (int col : c.colors)
        if (col < 1) throw Error(Errc::PartialColoring, "non-positive color " + std::to_string(col));
}

// Lowest middle edge certifying that e and f conflict.
EdgeId conflict_via(const Graph& g, EdgeId e, EdgeId f, bool* triangle) {
    auto [a1, a2] = g.edge(e);
    auto [b1, b2] = g.edge(f);
    int shared = (a1 == b1) + (a1 == b2) + (a2 == b1) + (a2 == b2);
    if (shared == 1) {
        VertexId common = (a1 == b1 || a1 == b2) ? a1 : a2;
        VertexId x = a1 == common ? a2 : a1;
        VertexId y = b1 == common ? b2 : b1;
        *triangle = true;
        return *g.edge_id(x, y);
    }
    *triangle = false;
    EdgeId best = -1;
    for (VertexId u : {a1, a2})
        for (VertexId v : {b1, b2})
            if (auto mid = g.edge_id(u, v))
                if (best == -1 || *mid < best) best = *mid;
    return best;
}

} // namespace

int EdgeColoring::palette_size() const { return distinct_count(colors); }
int VertexColoring::palette_size() const { return distinct_count(colors); }

InjectiveVerdict verify_injective(const Graph& g, const EdgeColoring& c) {
    require_total(g, c);
    int m = g.edge_count();
    for (EdgeId e = 0; e < m; ++e) {
        for (EdgeId f = e + 1; f < m; ++f) {
            if (c.colors[static_cast<std::size_t>(e)] != c.colors[static_cast<std::size_t>(f)]) continue;
            if (!edges_conflict(g, e, f)) continue;
            InjectiveViolation w;
            w.e1 = e;
            w.e2 = f;
            w.via = conflict_via(g, e, f, &w.triangle);
            return {false, w};
        }
    }
    return {true, std::nullopt};
}

StarVerdict verify_star_coloring(const Graph& g, const VertexColoring& vc) {
    if (static_cast<int>(vc.colors.size()) != g.vertex_count())
        throw Error(Errc::PartialColoring, "vertex coloring not total");
    const auto& col = vc.colors;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (col[static_cast<std::size_t>(u)] == col[static_cast<std::size_t>(v)])
            return {false, StarViolation{{u, v}}};
    }
    // Proper by now; a bicolored path a-b-c-d means col(a)=col(c), col(b)=col(d).
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [b, cvx] = g.edge(e);
        for (auto [x, y] : {std::pair<VertexId, VertexId>{b, cvx}, {cvx, b}}) {
            for (VertexId a : g.neighbors(x)) {
                if (a == y) continue;
                if (col[static_cast<std::size_t>(a)] != col[static_cast<std::size_t>(y)]) continue;
                for (VertexId d : g.neighbors(y)) {
                    if (d == x || d == a) continue;
                    if (col[static_cast<std::size_t>(d)] == col[static_cast<std::size_t>(x)])
                        return {false, StarViolation{{a, x, y, d}}};
                }
            }
        }
    }
    return {true, std::nullopt};
}

StarForestDecomposition star_forest_decomposition(const Graph& g, const EdgeColoring& c) {
    auto verdict = verify_injective(g, c);
    if (!verdict.valid) throw Error(Errc::NotInjective, "decomposition requires a valid injective coloring");

    std::map<int, std::vector<EdgeId>> by_color;
    for (EdgeId e = 0; e < g.edge_count(); ++e) by_color[c.colors[static_cast<std::size_t>(e)]].push_back(e);

    StarForestDecomposition out;
    for (auto& [color, klass] : by_color) {
        // Certify: the class edges induce a star forest of g.
        std::set<VertexId> span;
        std::map<VertexId, int> class_degree;
        std::set<EdgeId> in_class(klass.begin(), klass.end());
        for (EdgeId e : klass) {
            auto [u, v] = g.edge(e);
            span.insert(u);
            span.insert(v);
            ++class_degree[u];
            ++class_degree[v];
        }
        for (VertexId u : span)
            for (EdgeId e : g.incident_edges(u)) {
                VertexId v = g.other_endpoint(e, u);
                if (span.count(v) && !in_class.count(e))
                    throw Error(Errc::Internal, "color class " + std::to_string(color) + " is not induced");
            }
        // Each component must be a star: walk components over class edges.
        std::set<VertexId> done;
        for (VertexId root : span) {
            if (done.count(root)) continue;
            std::vector<VertexId> stack{root}, comp;
            done.insert(root);
            while (!stack.empty()) {
                VertexId u = stack.back();
                stack.pop_back();
                comp.push_back(u);
                for (EdgeId e : g.incident_edges(u)) {
                    if (!in_class.count(e)) continue;
                    VertexId v = g.other_endpoint(e, u);
                    if (!done.count(v)) {
                        done.insert(v);
                        stack.push_back(v);
                    }
                }
            }
            int edges_here = 0, max_deg = 0;
            for (VertexId u : comp) {
                edges_here += class_degree[u];
                max_deg = std::max(max_deg, class_degree[u]);
            }
            edges_here /= 2;
            if (static_cast<int>(comp.size()) != edges_here + 1 || max_deg != edges_here)
                throw Error(Errc::Internal, "color class " + std::to_string(color) + " has a non-star component");
        }
        out.classes.push_back(std::move(klass));
    }
    return out;
}

EdgeColoring star_to_injective(const Graph& g, const VertexColoring& vc) {
    auto verdict = verify_star_coloring(g, vc);
    if (!verdict.valid) throw Error(Errc::NotStarColoring, "input is not a star coloring");

    std::vector<std::pair<std::uint64_t, std::uint64_t>> pair_of(static_cast<std::size_t>(g.edge_count()));
    std::set<std::pair<std::uint64_t, std::uint64_t>> used;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        std::uint64_t a = vc.colors[static_cast<std::size_t>(u)], b = vc.colors[static_cast<std::size_t>(v)];
        if (a > b) std::swap(a, b);
        pair_of[static_cast<std::size_t>(e)] = {a, b};
        used.insert({a, b});
    }
    std::map<std::pair<std::uint64_t, std::uint64_t>, int> rank;
    int next = 1;
    for (const auto& p : used) rank[p] = next++;
    EdgeColoring out;
    out.colors.resize(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out.colors[static_cast<std::size_t>(e)] = rank[pair_of[static_cast<std::size_t>(e)]];
    return out;
}

VertexColoring injective_to_star(const Graph& g, const EdgeColoring& c) {
    auto verdict = verify_injective(g, c);
    if (!verdict.valid) throw Error(Errc::NotInjective, "input is not injective");

    // Dense bit position per color value; signatures live in a 64-bit token.
    std::set<int> palette(c.colors.begin(), c.colors.end());
    if (palette.size() > 64) throw Error(Errc::TooLarge, "signature tokens support at most 64 colors");
    std::map<int, int> bit;
    int next = 0;
    for (int col : palette) bit[col] = next++;

    VertexColoring out;
    out.colors.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 2) continue; // degree-1 and isolated vertices stay all-zeros
        std::uint64_t sig = 0;
        for (EdgeId e : g.incident_edges(v)) sig |= std::uint64_t{1} << bit[c.colors[static_cast<std::size_t>(e)]];
        out.colors[static_cast<std::size_t>(v)] = sig;
    }
    // Isolated-edge components would be monochromatic all-zeros; give the
    // higher endpoint its incidence signature instead.
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (g.degree(u) == 1 && g.degree(v) == 1) {
            VertexId hi = std::max(u, v);
            out.colors[static_cast<std::size_t>(hi)] = std::uint64_t{1} << bit[c.colors[static_cast<std::size_t>(e)]];
        }
    }
    return out;
}

VertexColoring greedy_star_coloring(const Graph& g) {
    int n = g.vertex_count();
    VertexColoring vc;
    vc.colors.assign(static_cast<std::size_t>(n), 0);
    std::vector<char> colored(static_cast<std::size_t>(n), 0);
    auto& col = vc.colors;

    auto ok_locally = [&](VertexId v) {
        for (VertexId u : g.neighbors(v))
            if (colored[static_cast<std::size_t>(u)] && col[static_cast<std::size_t>(u)] == col[static_cast<std::size_t>(v)])
                return false;
        // Paths v-b-c-d and a-v-c-d with all four vertices colored.
        for (VertexId b : g.neighbors(v)) {
            if (!colored[static_cast<std::size_t>(b)]) continue;
            for (VertexId cvx : g.neighbors(b)) {
                if (cvx == v || !colored[static_cast<std::size_t>(cvx)]) continue;
                if (col[static_cast<std::size_t>(cvx)] == col[static_cast<std::size_t>(v)]) {
                    for (VertexId d : g.neighbors(cvx)) {
                        if (d == b || d == v || !colored[static_cast<std::size_t>(d)]) continue;
                        if (col[static_cast<std::size_t>(d)] == col[static_cast<std::size_t>(b)]) return false;
                    }
                }
            }
        }
        for (VertexId a : g.neighbors(v)) {
            if (!colored[static_cast<std::size_t>(a)]) continue;
            for (VertexId cvx : g.neighbors(v)) {
                if (cvx == a || !colored[static_cast<std::size_t>(cvx)]) continue;
                if (col[static_cast<std::size_t>(a)] != col[static_cast<std::size_t>(cvx)]) continue;
                for (VertexId d : g.neighbors(cvx)) {
                    if (d == v || d == a || !colored[static_cast<std::size_t>(d)]) continue;
                    if (col[static_cast<std::size_t>(d)] == col[static_cast<std::size_t>(v)]) return false;
                }
            }
        }
        return true;
    };

    for (VertexId v = 0; v < n; ++v) {
        for (std::uint64_t candidate = 1;; ++candidate) {
            col[static_cast<std::size_t>(v)] = candidate;
            colored[static_cast<std::size_t>(v)] = 1;
            if (ok_locally(v)) break;
            colored[static_cast<std::size_t>(v)] = 0;
        }
    }
    return vc;
}

} // namespace inj

#ifndef INJ_GENERATE_HPP
#define INJ_GENERATE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "inj/graph.hpp"

namespace inj {

/// Deterministic RNG wrapper; rejection sampling keeps draws uniform and
/// reproducible regardless of the standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Uniform integer in [0, bound).
    int below(int bound);
    bool coin() { return below(2) == 1; }

private:
    std::mt19937_64 state_;
};

/// Uniform simple graph with n vertices and m edges (m capped at C(n,2)).
Graph random_graph(int n, int m, Rng& rng);

/// Uniform-ish random tree by sequential attachment.
Graph random_tree(int n, Rng& rng);

/// Connected graph with max degree <= 3: degree-capped random tree plus
/// `extra` random edges between degree-deficient vertices.
Graph random_connected_subcubic(int n, int extra, Rng& rng);

/// Chain of polygons (cycle lengths 3..6) fused edge-to-edge, optionally
/// with pendant paths; outerplanar by construction, max degree <= 3.
Graph random_polygon_chain(int polygons, Rng& rng);

/// Richer outerplanar sampler: a polygon grown by `ops` operations drawn
/// from {pendant path, polygon fused on a free edge, cycle hung off a path
/// arm}. Outerplanar with max degree <= 3 by construction.
Graph random_outerplanar_subcubic(int ops, Rng& rng);

/// Canonical certificate: lexicographically maximal adjacency bit rows over
/// all vertex orderings. Usable as an isomorphism key for small graphs.
std::vector<std::uint32_t> canonical_certificate(const Graph& g);

/// All connected graphs with max degree <= 3 on up to max_n vertices, one
/// representative per isomorphism class.
std::vector<Graph> enumerate_connected_subcubic(int max_n);

struct ProbeOffender {
    int index = 0;
    int n = 0;
    std::string graph6;
};

struct ProbeReport {
    bool bipartite_mode = false;
    int enumerated = 0;
    int sampled = 0;
    int corpus_included = 0;
    int max_index = 0;
    std::string max_graph6;
    int conjecture_ceiling = 0;           // 6 subcubic, 5 bipartite subcubic
    std::vector<ProbeOffender> over_conjecture; // would refute the conjecture
    bool over_theorem = false;            // index above 2(Delta-1)^2 = 8: a bug
};

/// Exact-solves enumerated subcubic graphs (up to enum_max_n) plus `count`
/// seeded samples at up to sample_max_n vertices; reports the maximum index
/// and anything beyond the conjectured ceiling.
ProbeReport conjecture_probe(bool bipartite_only, int enum_max_n, int sample_max_n, int count,
                             std::uint64_t seed);

} // namespace inj

#endif

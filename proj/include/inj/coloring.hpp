#ifndef INJ_COLORING_HPP
#define INJ_COLORING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "inj/graph.hpp"

namespace inj {

/// Total mapping edge id -> positive color index.
struct EdgeColoring {
    std::vector<int> colors; // colors[e] >= 1, indexed by edge id

    int palette_size() const;
};

/// Total mapping vertex id -> opaque comparable color token. Bit-vector
/// signatures fit in the 64-bit token.
struct VertexColoring {
    std::vector<std::uint64_t> colors;

    int palette_size() const;
};

/// Failure witness for verify_injective: edges e1 < e2 share a color and
/// conflict; `via` is the middle edge of a length-3 path between them, or
/// the closing edge when they lie in a common triangle.
struct InjectiveViolation {
    EdgeId e1 = -1;
    EdgeId e2 = -1;
    EdgeId via = -1;
    bool triangle = false;
};

struct InjectiveVerdict {
    bool valid = true;
    std::optional<InjectiveViolation> witness;
};

/// Failure witness for verify_star_coloring: a monochromatic edge (2
/// vertices) or a bicolored path on 4 vertices.
struct StarViolation {
    std::vector<VertexId> path;
};

struct StarVerdict {
    bool valid = true;
    std::optional<StarViolation> witness;
};

InjectiveVerdict verify_injective(const Graph& g, const EdgeColoring& c);
StarVerdict verify_star_coloring(const Graph& g, const VertexColoring& vc);

/// Color classes of a valid injective coloring, one edge set per color in
/// ascending color order. Each class is certified to induce a star forest.
struct StarForestDecomposition {
    std::vector<std::vector<EdgeId>> classes;
};

StarForestDecomposition star_forest_decomposition(const Graph& g, const EdgeColoring& c);

/// Edge uv receives the canonical pair {vc(u), vc(v)}, densely renumbered;
/// valid injective with at most k(k-1)/2 colors for a k-color star coloring.
EdgeColoring star_to_injective(const Graph& g, const VertexColoring& vc);

/// k-bit incidence signatures; degree-1 vertices forced to all-zeros, and
/// isolated-edge components get a fixed two-coloring. At most 2^k tokens,
/// 2^k - 1 when the minimum degree is at least 2.
VertexColoring injective_to_star(const Graph& g, const EdgeColoring& c);

/// Simple sequential star coloring (smallest token keeping the partial
/// coloring proper and free of bicolored 4-vertex paths). Test/probe helper.
VertexColoring greedy_star_coloring(const Graph& g);

} // namespace inj

#endif

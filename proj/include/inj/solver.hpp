#ifndef INJ_SOLVER_HPP
#define INJ_SOLVER_HPP

#include <optional>
#include <vector>

#include "inj/coloring.hpp"
#include "inj/graph.hpp"

namespace inj {

struct SolveResult {
    int index = 0;                       // the injective chromatic index
    EdgeColoring coloring;               // witness with exactly `index` colors
    std::vector<EdgeId> clique;          // pairwise-conflicting edges, |clique| <= index
};

/// Proper vertex k-colorability of an arbitrary graph by complete DSATUR
/// branch and bound with clique-seeded symmetry breaking. Deterministic.
std::optional<std::vector<int>> proper_k_coloring(const Graph& g, int k);

/// A valid injective k-edge-coloring of g, or nullopt when none exists.
std::optional<EdgeColoring> is_k_colorable(const Graph& g, int k);

/// Exact injective chromatic index via chi(G^(*)), ascending from the
/// clique lower bound.
SolveResult injective_chromatic_index(const Graph& g);

/// Independent oracle: exhaustive backtracking directly on the consecutive-
/// edges definition, no conflict graph. Guarded to m <= 20.
int brute_force_index(const Graph& g);

/// A clique in conflict_graph(g) found by bounded branch and bound; maximal
/// under the node budget, size is a valid lower bound on the index.
std::vector<EdgeId> max_conflict_clique(const Graph& g, long budget = 200000);

/// Clique in an arbitrary graph (same engine, exposed for reuse).
std::vector<int> max_clique(const Graph& g, long budget = 200000);

} // namespace inj

#endif

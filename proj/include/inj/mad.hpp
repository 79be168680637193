#ifndef INJ_MAD_HPP
#define INJ_MAD_HPP

#include "inj/graph.hpp"
#include "inj/rational.hpp"

namespace inj {

/// Exact maximum average degree: max over non-empty subgraphs H of
/// 2|E(H)|/|V(H)|. Stern-Brocot walk over candidate densities with
/// denominator at most n; each probe is one integer min-cut on the usual
/// density network.
Rational mad_exact(const Graph& g);

/// Vertex set of a densest induced subgraph (any maximizer; deterministic).
std::vector<VertexId> densest_subgraph(const Graph& g);

} // namespace inj

#endif

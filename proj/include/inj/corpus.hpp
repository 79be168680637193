#ifndef INJ_CORPUS_HPP
#define INJ_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "inj/graph.hpp"
#include "inj/rational.hpp"

namespace inj {

/// Named fixture with expected values and provenance. Expected values are
/// re-verified by the exact solver in the acceptance suite; a fixture whose
/// structural assertions fail is a FixtureError, not a solver bug.
struct NamedGraph {
    std::string name;
    Graph graph;
    std::optional<int> expected_index;
    std::optional<Rational> expected_mad;
    std::string provenance;
};

const NamedGraph& corpus_get(const std::string& name);
std::vector<std::string> corpus_list();

/// Caption-level structural assertions (fig1 cubic+bipartite, fig3 has
/// max degree 3, Heawood girth 6 / 14 vertices / 21 edges, fig2 mad = 2).
/// Throws Errc::Internal with a "fixture" message on violation.
void corpus_structural_check(const NamedGraph& fixture);

} // namespace inj

#endif

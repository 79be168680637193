#ifndef INJ_BOUNDS_HPP
#define INJ_BOUNDS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "inj/coloring.hpp"
#include "inj/graph.hpp"

namespace inj {

struct BoundResult {
    EdgeColoring coloring;
    int bound_claimed = 0;
    std::string method;
};

/// Exact-optimal coloring of a connected path or cycle by the repeating
/// (a,a,b,b) pattern, with the n mod 4 case split for cycles.
BoundResult color_path_or_cycle(const Graph& g);

/// At most 3 colors on any forest: paths get the (a,a,b,b) pattern, branched
/// trees color each edge by the depth of its lower endpoint mod 3.
BoundResult color_tree(const Graph& g);

/// Constructive Brooks: proper coloring with at most max-degree colors
/// unless the (component) graph is complete or an odd cycle.
VertexColoring brooks_proper_coloring(const Graph& g);

/// chi'_inj <= 2(Delta-1)^2 via Brooks on the conflict graph components.
BoundResult color_general(const Graph& g);

/// Bipartite bound min{D1(D2-1), D2(D1-1)}+1 (3 when Delta=2) by properly
/// coloring the distance-two graph on one side.
BoundResult color_bipartite(const Graph& g);

/// Subcubic bipartite <= 6; the K7 distance-two component is the Heawood
/// graph and is solved exactly with 4 colors.
BoundResult color_subcubic_bipartite(const Graph& g);

enum class Ruleset { Mad73, Mad83, Mad3, Outerplanar };

struct Configuration {
    enum class Kind {
        // mad < 7/3
        WeakTwoVertex,
        ThreeVertexTwoOnes,
        TriangleTwoTwos,
        FourCycleThreeTwos,
        PathThreeTwos,
        BranchThreeTwos,
        // mad < 8/3
        OneVertex,
        AdjacentTwoVertices,
        ThreeVertexTwoTwos,
        // mad < 3
        TwoVertex,
        // outerplanar
        PathComponent,
        CycleComponent,
        TreeComponent,
        CyclePlusPendant,
        ThetaComponent,
        PendantEdgeAtBranch,
        PendantSimplePath,
        ChainCycleOneAnchor,
        ChainCycleTwoAnchors,
    };
    Kind kind;
    std::vector<VertexId> vertices;  // role vertices, kind-specific order
    std::vector<EdgeId> remove_edges; // deletion batch, extension order
};

const char* kind_name(Configuration::Kind k);

/// First configuration of the ruleset in fixed scan order (kind order as
/// listed, then lowest vertex); nullopt at the base case.
std::optional<Configuration> find_reducible_configuration(const Graph& g, Ruleset rs);

struct ReductionStep {
    Configuration config;
    std::vector<std::vector<EdgeId>> groups; // same-color groups, extension order
    std::vector<EdgeId> recolor;             // retained edges revised during extension
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
};

/// Peel configurations, color the base graph, extend backwards; 4, 6 or 7
/// colors under mad < 7/3, 8/3, 3. The mad precondition is checked exactly
/// unless trust_mad is set.
BoundResult color_subcubic_mad(const Graph& g, Ruleset threshold, bool trust_mad = false,
                               ReductionTrace* trace_out = nullptr);

/// At most 5 colors with the strengthened property (every simple path of
/// length three carries exactly two colors) for subcubic outerplanar inputs;
/// reports ReductionStalled when the chain-cycle reductions never apply.
BoundResult color_outerplanar_subcubic(const Graph& g, ReductionTrace* trace_out = nullptr);

/// First length-3 path v1v2v3v4 with deg(v2)=deg(v3)=2 whose three edges do
/// not carry exactly two colors; nullopt when the property holds.
std::optional<std::array<EdgeId, 3>> strengthened_property_violation(const Graph& g,
                                                                     const EdgeColoring& c);

} // namespace inj

#endif

#ifndef INJ_IO_HPP
#define INJ_IO_HPP

#include <string>
#include <vector>

#include "inj/graph.hpp"
#include "inj/rational.hpp"

namespace inj {

enum class GraphFormat { Graph6, EdgeList, Dimacs };

/// Infer a format from a file name: .g6 -> graph6, .col -> DIMACS,
/// anything else -> edge list.
GraphFormat format_from_path(const std::string& path);

/// graph6 per the nauty specification: N(n) header then the upper-triangle
/// column-order bits, 6 per printable byte offset by 63. Bit-exact.
Graph read_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

/// "n m" then m lines "u v", 0-indexed.
Graph read_edgelist(const std::string& text);
std::string write_edgelist(const Graph& g);

/// DIMACS col: "p edge n m" then "e u v", 1-indexed; "c" comments.
Graph read_dimacs(const std::string& text);
std::string write_dimacs(const Graph& g);

Graph read_graph_text(const std::string& text, GraphFormat format);
Graph read_graph_file(const std::string& path, GraphFormat format);

/// Result object with stable key order: {graph: {n, m}, method,
/// index_or_bound, colors, valid, certificates: {clique}}.
std::string write_result_json(const Graph& g, const std::string& method, int index_or_bound,
                              const std::vector<int>& colors, const std::vector<EdgeId>& clique);

/// Header line then one "edge_u<TAB>edge_v<TAB>color" row per edge.
std::string write_result_tsv(const Graph& g, const std::vector<int>& colors);

/// {"graph": {...}, "method": "mad", "mad": {"num": .., "den": ..}}
std::string write_mad_json(const Graph& g, const Rational& mad);

} // namespace inj

#endif

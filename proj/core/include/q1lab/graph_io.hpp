#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "q1lab/graph.hpp"

namespace q1lab {

/// graph6 encoding: printable-ASCII packing of the upper adjacency
/// triangle, 6 bits per character offset by 63, columns (0,1),(0,2),
/// (1,2),(0,3),...  Uses the long size form for n >= 63.
std::string to_graph6(const Graph& g);

/// Parses a graph6 string; a leading ">>graph6<<" header is accepted.
/// Throws std::invalid_argument on malformed input.
Graph from_graph6(std::string_view s);

/// Edge-list text: first line "n m", then m lines "u v" (0-indexed).
std::string to_edge_list_text(const Graph& g);
Graph from_edge_list_text(std::string_view text);

Graph read_graph_file(const std::string& path);  // edge-list format

}  // namespace q1lab

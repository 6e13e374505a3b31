#pragma once

#include <string>
#include <string_view>

#include "seidel/graph.hpp"

namespace seidel {

// Edge-list text format: a header line "n <order>" followed by one "i j"
// pair per line with 0 <= i < j < order. '#' starts a comment, blank lines
// are skipped, encoding is UTF-8 with LF endings.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// graph6 printable encoding (6 bits per byte offset by 63, upper triangle in
// column order). An optional ">>graph6<<" header is skipped; only the first
// non-empty line is read.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Sniffs the two formats: an edge-list header wins, anything else is graph6.
Graph parse_graph_auto(std::string_view text);

}  // namespace seidel

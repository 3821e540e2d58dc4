#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "idom/graph.hpp"

namespace idom {

// graph6: standard compact ASCII encoding. Order n <= 62 uses the one-byte
// 63+n header; 63 <= n <= 258047 uses the '~' three-byte extension. Edge bits
// follow in column-major upper-triangle order, six bits per byte, zero-padded.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

// Plain text: first line "n m", then m lines "u v" (0-based).
std::string to_edge_list_text(const Graph& g);
Graph from_edge_list_text(std::string_view text);

enum class GraphFormat { Auto, Graph6, EdgeList };

// Parses file content: one graph per line for graph6, a single graph for
// edge-list text. Auto sniffs edge-list by a leading digit line.
std::vector<Graph> parse_graphs(std::string_view content, GraphFormat format);

}  // namespace idom

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

/// Decode a graph6 string (single-byte header tier, n < 63): header byte
/// n+63, then the upper-triangle bits in column order (0,1),(0,2),(1,2),
/// (0,3),... packed big-endian into 6-bit groups, each offset by 63.
/// Throws ParseError carrying the byte offset of the first bad byte.
Graph parse_graph6(std::string_view text);

/// Inverse of parse_graph6; bit-exact round trip.
std::string to_graph6(const Graph& g);

/// Decode the plain-text edge list format: first significant line "n",
/// then one "u v" pair per line, 0-based; '#' starts a comment.
Graph parse_edge_list_text(std::string_view text);

std::string to_edge_list_text(const Graph& g);

/// Load a graph file: edge-list format if the first significant line is a
/// bare integer, otherwise one graph6 string per line. '#' comments and
/// blank lines are allowed in both.
std::vector<Graph> load_graphs_from_file(const std::string& path);

std::vector<Graph> parse_graph_collection(std::string_view text);

}  // namespace sombor

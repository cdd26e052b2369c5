#pragma once

#include <iosfwd>
#include <string>

#include "cycram/graph.hpp"

namespace cycram::io {

// Edge-list text: "p <N> <M>" then M lines "e <u> <v>" (0-based). Lines starting
// with 'c' and blank lines are ignored on read. Writes use u < v in sorted order.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

// graph6 (orders up to 258047).
Graph from_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

/// Dispatches on extension: ".g6" is graph6, anything else edge-list.
Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

}  // namespace cycram::io

#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critlab/graph.hpp"

namespace critlab {

/// Decodes one graph6 line (trailing CR/LF tolerated). Throws Graph6Error
/// naming the offending byte offset.
Graph parse_graph6(std::string_view line);

std::string to_graph6(const Graph& g);

/// One input line of a graph6 stream, decoded or not.
struct Graph6Line {
  std::size_t line_number = 0;  // 1-based
  std::string text;
  std::optional<Graph> graph;
  std::string error;  // set when graph is empty
};

/// Reads every non-empty line; parse failures are recorded per line.
std::vector<Graph6Line> read_graph6_lines(std::istream& in);

/// Reads a graph6 file and throws Graph6Error on the first bad line.
std::vector<Graph> load_graph6_file(const std::string& path);

}  // namespace critlab

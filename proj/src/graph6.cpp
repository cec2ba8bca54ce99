#include "critlab/graph6.hpp"

#include <fstream>
#include <optional>

#include "critlab/errors.hpp"

namespace critlab {

namespace {

constexpr int kBias = 63;
constexpr int kMaxPrintable = 126;

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error(0, "empty graph6 string");

  for (std::size_t i = 0; i < line.size(); ++i) {
    const int c = static_cast<unsigned char>(line[i]);
    if (c < kBias || c > kMaxPrintable) {
      throw Graph6Error(i, "character " + std::to_string(c) + " outside 63..126");
    }
  }
  const int n = static_cast<unsigned char>(line[0]) - kBias;
  if (n > Graph::kMaxOrder) {
    throw Graph6Error(0, "order " + std::to_string(n) + " exceeds " +
                             std::to_string(Graph::kMaxOrder));
  }
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (line.size() != 1 + nbytes) {
    throw Graph6Error(std::min(line.size(), 1 + nbytes),
                      "expected " + std::to_string(1 + nbytes) + " bytes for order " +
                          std::to_string(n) + ", got " + std::to_string(line.size()));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int chunk = static_cast<unsigned char>(line[1 + k / 6]) - kBias;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  // Padding bits in the final byte must be zero.
  if (nbits % 6 != 0) {
    const int last = static_cast<unsigned char>(line.back()) - kBias;
    if ((last & ((1 << (6 - nbits % 6)) - 1)) != 0) {
      throw Graph6Error(line.size() - 1, "nonzero padding bits");
    }
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + kBias));
  int chunk = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph6Line> read_graph6_lines(std::istream& in) {
  std::vector<Graph6Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    Graph6Line line{number, text, std::nullopt, {}};
    try {
      line.graph = parse_graph6(text);
    } catch (const Graph6Error& e) {
      line.error = e.what();
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<Graph> load_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Graph> out;
  for (Graph6Line& line : read_graph6_lines(in)) {
    if (!line.graph) {
      throw Graph6Error(0, path + ":" + std::to_string(line.line_number) + ": " + line.error);
    }
    out.push_back(*line.graph);
  }
  return out;
}

}  // namespace critlab

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "critlab/graph.hpp"
#include "critlab/serialize.hpp"

namespace critlab::cli {

enum ExitCode : int {
  kSuccess = 0,
  kClaimFailure = 1,
  kParseError = 2,
  kUsage = 64,
};

struct AnalyzeFlags {
  bool alpha = false;
  bool critical = false;
  bool tok4 = false;
  bool cover = false;

  bool any() const { return alpha || critical || tok4 || cover; }
  static AnalyzeFlags all() { return {true, true, true, true}; }
};

/// Exactly one of the two is set.
struct CorpusSource {
  std::optional<int> enumerate_up_to;
  std::optional<std::string> file;
};

struct EnumerateFlags {
  bool alpha_critical = false;
  bool tok4_free = false;
};

/// One analysis record, fields in a fixed order. Analyses that hit a size
/// limit leave an "error" field instead of aborting.
Json analyze_graph(const Graph& g, AnalyzeFlags flags);

int cmd_analyze(std::istream& in, std::ostream& out, std::ostream& err, AnalyzeFlags flags);
int cmd_verify(const std::vector<std::string>& claims, const CorpusSource& source,
               std::ostream& out, std::ostream& err);
int cmd_witness(const CorpusSource& source, std::ostream& out, std::ostream& err);
int cmd_enumerate(int n, EnumerateFlags flags, std::ostream& out, std::ostream& err);
/// Reads every connected graph on k vertices and prints every connected graph
/// on k + 1 vertices, optionally only the alpha-critical ones.
int cmd_extend(const std::string& path, bool alpha_critical_only, std::ostream& out,
               std::ostream& err);

/// Parses argv and dispatches; standard input feeds `analyze` when no file
/// is given.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace critlab::cli

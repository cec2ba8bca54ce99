#include "critlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "critlab/canonical.hpp"
#include "critlab/cover.hpp"
#include "critlab/errors.hpp"
#include "critlab/graph6.hpp"
#include "critlab/parallel.hpp"
#include "critlab/proof_lab.hpp"
#include "critlab/stability.hpp"
#include "critlab/tok4.hpp"

namespace critlab::cli {

namespace {

void print(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

struct LoadedCorpus {
  std::vector<Graph> graphs;
  int status = kSuccess;
};

LoadedCorpus load_corpus(const CorpusSource& source, std::ostream& err) {
  LoadedCorpus corpus;
  if (source.enumerate_up_to) {
    const int n = *source.enumerate_up_to;
    if (n < 1 || n > kMaxEnumerateOrder) {
      err << "error: --enumerate supports 1.." << kMaxEnumerateOrder
          << "; pass larger corpora with --file\n";
      corpus.status = kUsage;
      return corpus;
    }
    for (int k = 1; k <= n; ++k) {
      std::vector<Graph> level = enumerate_connected(k);
      corpus.graphs.insert(corpus.graphs.end(), level.begin(), level.end());
    }
    return corpus;
  }
  std::ifstream in(*source.file);
  if (!in) {
    err << "error: cannot open " << *source.file << '\n';
    corpus.status = kUsage;
    return corpus;
  }
  for (const Graph6Line& line : read_graph6_lines(in)) {
    if (line.graph) {
      corpus.graphs.push_back(*line.graph);
    } else {
      err << *source.file << ": line " << line.line_number << ": " << line.error << '\n';
      corpus.status = kParseError;
    }
  }
  return corpus;
}

}  // namespace

Json analyze_graph(const Graph& g, AnalyzeFlags flags) {
  Json record{{"graph6", to_graph6(g)}, {"n", g.order()}, {"m", g.size()}};
  try {
    if (flags.alpha) record["alpha"] = alpha(g);
    if (flags.critical) {
      const CriticalEdgeSet crit = critical_edges(g);
      record["alpha_critical"] = static_cast<int>(crit.edges.size()) == g.size();
      record["critical_edge_count"] = crit.edges.size();
    }
    if (flags.tok4) {
      const auto cert = find_tok4(g);
      record["tok4"] = cert ? to_json(*cert) : Json(nullptr);
    }
    if (flags.cover) {
      const auto [doubled, family] = rho_tilde(g);
      record["rho_tilde_times_2"] = doubled;
      record["cover"] = to_json(family);
    }
  } catch (const SizeLimitError& e) {
    record["error"] = e.what();
  }
  return record;
}

int cmd_analyze(std::istream& in, std::ostream& out, std::ostream& err, AnalyzeFlags flags) {
  if (!flags.any()) flags = AnalyzeFlags::all();
  const std::vector<Graph6Line> lines = read_graph6_lines(in);
  const std::vector<Json> records = parallel_map(std::span<const Graph6Line>(lines), [&](const Graph6Line& line) {
    if (!line.graph) return Json{{"line", line.line_number}, {"error", line.error}};
    return analyze_graph(*line.graph, flags);
  });
  int status = kSuccess;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!lines[i].graph) {
      err << "line " << lines[i].line_number << ": " << lines[i].error << '\n';
      status = kParseError;
    }
    print(out, records[i]);
  }
  return status;
}

int cmd_verify(const std::vector<std::string>& claims, const CorpusSource& source,
               std::ostream& out, std::ostream& err) {
  std::vector<ClaimId> ids;
  for (const std::string& name : claims) {
    if (name == "all") {
      ids.insert(ids.end(), all_claims().begin(), all_claims().end());
    } else if (const auto id = parse_claim(name)) {
      ids.push_back(*id);
    } else {
      err << "error: unknown claim '" << name << "'\n";
      return kUsage;
    }
  }
  const LoadedCorpus corpus = load_corpus(source, err);
  if (corpus.status == kUsage) return kUsage;

  bool failed = false;
  for (ClaimId id : ids) {
    std::map<Verdict, int> tally{{Verdict::pass, 0}, {Verdict::fail, 0}, {Verdict::inapplicable, 0}};
    for (const ClaimReport& r : run_claim(id, corpus.graphs)) {
      ++tally[r.verdict];
      print(out, to_json(r));
    }
    failed = failed || tally[Verdict::fail] > 0;
    print(out, Json{{"summary", claim_name(id)},
                    {"pass", tally[Verdict::pass]},
                    {"fail", tally[Verdict::fail]},
                    {"inapplicable", tally[Verdict::inapplicable]}});
  }
  if (failed) return kClaimFailure;
  return corpus.status;
}

int cmd_witness(const CorpusSource& source, std::ostream& out, std::ostream& err) {
  const LoadedCorpus corpus = load_corpus(source, err);
  if (corpus.status == kUsage) return kUsage;
  int max_order = 0;
  for (const Graph& g : corpus.graphs) max_order = std::max(max_order, g.order());

  const auto w = find_strengthening_witness(corpus.graphs);
  if (!w) {
    print(out, Json{{"found", false},
                    {"reason", "none in range"},
                    {"max_order", max_order},
                    {"graphs_searched", corpus.graphs.size()}});
    return corpus.status;
  }
  Json deletions = Json::array();
  const auto tv = w->triangle.vertices();
  for (int i = 0; i < 3; ++i) {
    deletions.push_back(Json{{"vertex", tv[i]},
                             {"certificate", w->deletions[i] ? to_json(*w->deletions[i]) : Json(nullptr)}});
  }
  const bool verified = verify_strengthening_witness(*w);
  print(out, Json{{"found", true},
                  {"graph6", to_graph6(w->graph)},
                  {"triangle", tv},
                  {"deletions", std::move(deletions)},
                  {"verified", verified},
                  {"max_order", max_order}});
  if (!verified) return kClaimFailure;
  return corpus.status;
}

int cmd_enumerate(int n, EnumerateFlags flags, std::ostream& out, std::ostream& err) {
  if (n < 1 || n > kMaxEnumerateOrder) {
    err << "error: enumerate supports 1.." << kMaxEnumerateOrder
        << " vertices; supply larger corpora as graph6 files\n";
    return kUsage;
  }
  const std::vector<Graph> graphs = enumerate_connected(n);
  const std::vector<char> keep = parallel_map(std::span<const Graph>(graphs), [&](const Graph& g) -> char {
    if (flags.alpha_critical && !is_alpha_critical(g)) return 0;
    if (flags.tok4_free && contains_tok4(g)) return 0;
    return 1;
  });
  for (std::size_t i = 0; i < graphs.size(); ++i)
    if (keep[i]) out << to_graph6(graphs[i]) << '\n';
  return kSuccess;
}

int cmd_extend(const std::string& path, bool alpha_critical_only, std::ostream& out,
               std::ostream& err) {
  const LoadedCorpus corpus = load_corpus(CorpusSource{std::nullopt, path}, err);
  if (corpus.status != kSuccess) return corpus.status;
  std::function<bool(const Graph&)> keep;
  if (alpha_critical_only) {
    keep = [](const Graph& g) { return is_alpha_critical(g); };
  }
  try {
    for (const Graph& g : extend_connected(corpus.graphs, keep)) out << to_graph6(g) << '\n';
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kSuccess;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact stable-set, critical-graph and odd-K4 toolkit for small graphs", "critlab"};
  app.require_subcommand(1);

  AnalyzeFlags analyze_flags;
  bool analyze_all = false;
  std::string analyze_file;
  auto* analyze = app.add_subcommand("analyze", "Analyze graph6 lines from a file or standard input");
  analyze->add_flag("--all", analyze_all, "Run every analysis (default)");
  analyze->add_flag("--alpha", analyze_flags.alpha, "Stability number");
  analyze->add_flag("--critical", analyze_flags.critical, "Critical edges and alpha-criticality");
  analyze->add_flag("--tok4", analyze_flags.tok4, "Totally odd K4-subdivision certificate");
  analyze->add_flag("--cover", analyze_flags.cover, "Minimum vertex/edge/odd-cycle cover");
  analyze->add_option("--file,file", analyze_file, "graph6 input (default: standard input)");

  std::vector<std::string> claims;
  CorpusSource verify_source;
  auto* verify = app.add_subcommand("verify", "Check proof claims over a corpus");
  verify->add_option("claims", claims, "Claim ids, or 'all'")->required();
  auto* v_enum = verify->add_option("--enumerate", verify_source.enumerate_up_to,
                                    "Built-in corpus: connected graphs on 1..N vertices");
  auto* v_file = verify->add_option("--file", verify_source.file, "graph6 corpus file");
  v_enum->excludes(v_file);

  CorpusSource witness_source;
  auto* witness = app.add_subcommand("witness", "Search for a triangle where only two deletions keep an odd K4");
  auto* w_enum = witness->add_option("--enumerate", witness_source.enumerate_up_to,
                                     "Built-in corpus: connected graphs on 1..N vertices");
  auto* w_file = witness->add_option("--file", witness_source.file, "graph6 corpus file");
  w_enum->excludes(w_file);

  int enumerate_n = 0;
  EnumerateFlags enumerate_flags;
  auto* enumerate = app.add_subcommand("enumerate", "Print connected graphs on N vertices");
  enumerate->add_option("n", enumerate_n, "Vertex count")->required();
  enumerate->add_flag("--alpha-critical", enumerate_flags.alpha_critical, "Keep alpha-critical graphs only");
  enumerate->add_flag("--tok4-free", enumerate_flags.tok4_free, "Keep graphs without an odd K4");

  std::string extend_file;
  bool extend_alpha_critical = false;
  auto* extend = app.add_subcommand("extend", "Grow a complete corpus of connected graphs by one vertex");
  extend->add_option("--file", extend_file, "All connected graphs on k vertices")->required();
  extend->add_flag("--alpha-critical", extend_alpha_critical, "Keep alpha-critical graphs only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (*analyze) {
    if (analyze_all) analyze_flags = AnalyzeFlags::all();
    if (analyze_file.empty()) return cmd_analyze(in, out, err, analyze_flags);
    std::ifstream file(analyze_file);
    if (!file) {
      err << "error: cannot open " << analyze_file << '\n';
      return kUsage;
    }
    return cmd_analyze(file, out, err, analyze_flags);
  }
  auto has_source = [&](const CorpusSource& s) {
    if (s.enumerate_up_to || s.file) return true;
    err << "error: one of --enumerate N or --file PATH is required\n";
    return false;
  };
  if (*verify) {
    if (!has_source(verify_source)) return kUsage;
    return cmd_verify(claims, verify_source, out, err);
  }
  if (*witness) {
    if (!has_source(witness_source)) return kUsage;
    return cmd_witness(witness_source, out, err);
  }
  if (*enumerate) return cmd_enumerate(enumerate_n, enumerate_flags, out, err);
  if (*extend) return cmd_extend(extend_file, extend_alpha_critical, out, err);
  return kUsage;
}

}  // namespace critlab::cli

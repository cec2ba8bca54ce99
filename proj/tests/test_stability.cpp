#include "doctest.h"

#include <random>

#include "critlab/canonical.hpp"
#include "critlab/errors.hpp"
#include "critlab/stability.hpp"
#include "oracles.hpp"

using namespace critlab;

namespace {

Graph random_graph(std::mt19937& rng, int n, int percent) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < percent) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("alpha of named graphs") {
  CHECK(alpha(Graph(0)) == 0);
  CHECK(alpha(Graph(5)) == 5);
  CHECK(alpha(complete_graph(6)) == 1);
  CHECK(alpha(cycle_graph(7)) == 3);
  CHECK(alpha(cube_graph()) == 4);
  CHECK(alpha(petersen_graph()) == oracle::brute_alpha(petersen_graph()));
  CHECK(alpha(petersen_graph()) == 4);
}

TEST_CASE("branch and bound agrees with subset enumeration") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng() % 15);
    const Graph g = random_graph(rng, n, static_cast<int>(rng() % 100));
    const VertexSet s = max_stable_set(g);
    CHECK(is_stable(g, s));
    CHECK(s.size() == oracle::brute_alpha(g));
    CHECK(alpha(g) == s.size());
  }
}

TEST_CASE("maximum stable set listing") {
  CHECK(all_max_stable_sets(cycle_graph(6)).size() == 2);
  CHECK(all_max_stable_sets(cycle_graph(5)).size() == 5);
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 10), 40);
    const auto sets = all_max_stable_sets(g);
    CHECK(static_cast<int>(sets.size()) == oracle::brute_count_max_stable_sets(g));
    for (const VertexSet& s : sets) CHECK(s.size() == alpha(g));
  }
  CHECK_THROWS_AS(all_max_stable_sets(Graph(17)), SizeLimitError);
}

TEST_CASE("critical edges") {
  CHECK(critical_edges(cycle_graph(5)).edges.size() == 5);
  CHECK(critical_edges(cycle_graph(4)).edges.empty());
  CHECK(critical_edges(cycle_graph(6)).edges.empty());
  CHECK(critical_edges(path_graph(3)).edges.empty());
  CHECK(critical_edges(path_graph(4)).edges == std::vector<Edge>{Edge(0, 1), Edge(2, 3)});

  std::mt19937 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 8), 50);
    const int a = oracle::brute_alpha(g);
    for (const Edge& e : g.edges())
      CHECK(is_edge_critical(g, e) == (oracle::brute_alpha(g.without_edge(e)) > a));
  }
}

TEST_CASE("alpha-critical examples") {
  CHECK(is_alpha_critical(Graph(1)));
  CHECK(is_alpha_critical(Graph(3)));
  CHECK(is_alpha_critical(complete_graph(5)));
  CHECK(is_alpha_critical(cycle_graph(7)));
  CHECK_FALSE(is_alpha_critical(cycle_graph(6)));
  CHECK_FALSE(is_alpha_critical(cube_graph()));
  CHECK_FALSE(is_alpha_critical(path_graph(4)));
}

TEST_CASE("critical subgraph") {
  const Graph h = critical_subgraph(cycle_graph(6));
  CHECK(h.edges() == std::vector<Edge>{Edge(0, 5), Edge(1, 2), Edge(3, 4)});

  std::mt19937 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 9), 45);
    const Graph sub = critical_subgraph(g);
    CHECK(alpha(sub) == alpha(g));
    CHECK(is_alpha_critical(sub));
    for (const Edge& e : critical_edges(g).edges) CHECK(sub.has_edge(e));
    for (const Edge& e : sub.edges()) CHECK(g.has_edge(e));
  }
}

TEST_CASE("G minus_c u") {
  const Relabeled r = g_minus_c(cycle_graph(5), 0);
  CHECK(r.graph.order() == 4);
  CHECK(r.graph.size() == 2);
  CHECK(g_minus_c_edges(cycle_graph(5), 0) == std::vector<Edge>{Edge(1, 2), Edge(3, 4)});
  CHECK(g_minus_c(complete_graph(4), 2).graph == complete_graph(3));

  CHECK_THROWS_WITH_AS(g_minus_c(cycle_graph(6), 0), doctest::Contains("alpha-critical"),
                       PreconditionError);
  CHECK_THROWS_WITH_AS(g_minus_c(Graph(2), 0), doctest::Contains("connected"), PreconditionError);
}

TEST_CASE("both routes to G minus_c u agree on small alpha-critical graphs") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      if (!is_alpha_critical(g)) continue;
      for (int u = 0; u < n; ++u) CHECK(g_minus_c_edges(g, u) == g_minus_c_edges_by_stable_sets(g, u));
    }
  }
}

TEST_CASE("peeling yields a maximum stable set") {
  const StableSetCertificate c5 = peel_max_stable_set(cycle_graph(5));
  CHECK(c5.set.size() == 2);
  CHECK(verify_stable_set(c5));
  CHECK(peel_max_stable_set(complete_graph(4)).set.size() == 1);

  std::mt19937 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(rng, static_cast<int>(rng() % 11), 35);
    const StableSetCertificate c = peel_max_stable_set(g);
    CHECK(is_stable(g, c.set));
    CHECK(c.set.size() == oracle::brute_alpha(g));
    CHECK(verify_stable_set(c));
  }

  StableSetCertificate bad{cycle_graph(5), VertexSet{bit(0) | bit(1)}, 2};
  CHECK_FALSE(verify_stable_set(bad));
  StableSetCertificate small{cycle_graph(5), VertexSet{bit(0)}, 1};
  CHECK_FALSE(verify_stable_set(small));
}

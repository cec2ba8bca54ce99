#include "doctest.h"

#include <random>

#include "critlab/errors.hpp"
#include "critlab/graph.hpp"
#include "critlab/graph6.hpp"
#include "critlab/stability.hpp"

using namespace critlab;

namespace {

void check_invariants(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    CHECK_FALSE(g.has_edge(v, v));
    CHECK((g.neighbors(v) & ~g.vertices()) == 0);
    for_each_bit(g.neighbors(v), [&](int u) { CHECK(g.has_edge(u, v)); });
  }
}

}  // namespace

TEST_CASE("edges are normalized and loops rejected") {
  const Edge e(4, 1);
  CHECK(e.u == 1);
  CHECK(e.v == 4);
  CHECK_THROWS_AS(Edge(2, 2), PreconditionError);
}

TEST_CASE("graph order is capped at 32") {
  CHECK_NOTHROW(Graph(32));
  CHECK_THROWS_AS(Graph(33), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {Edge(0, 3)}), PreconditionError);
}

TEST_CASE("delete_vertex relabels downward and reports the map") {
  const Relabeled r = delete_vertex(complete_graph(3), 1);
  CHECK(r.graph == complete_graph(2));
  CHECK(r.to_parent == std::vector<int>{0, 2});
  CHECK(r.from_parent(3) == std::vector<int>{0, -1, 1});
  CHECK_THROWS_AS(delete_vertex(complete_graph(3), 3), PreconditionError);
}

TEST_CASE("edge surgery") {
  const Graph c5 = cycle_graph(5);
  for (const Edge& e : c5.edges()) {
    const Graph p = delete_edge(c5, e);
    CHECK(p.size() == 4);
    CHECK(p.is_connected());
    CHECK(p.max_degree() == 2);
    CHECK(p.min_degree() == 1);
  }
  CHECK(add_edge(path_graph(3), Edge(0, 2)) == complete_graph(3));
  CHECK_THROWS_AS(delete_edge(path_graph(3), Edge(0, 2)), PreconditionError);
  CHECK_THROWS_AS(add_edge(path_graph(3), Edge(0, 1)), PreconditionError);
}

TEST_CASE("contract_degree2") {
  SUBCASE("odd cycles shrink by two") {
    for (int u = 0; u < 5; ++u) CHECK(is_odd_cycle(contract_degree2(cycle_graph(5), u)));
    const Graph c = contract_degree2(cycle_graph(7), 3);
    CHECK(c.order() == 5);
    CHECK(is_odd_cycle(c));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(contract_degree2(complete_graph(4), 0), PreconditionError);
    CHECK_THROWS_AS(contract_degree2(complete_graph(3), 0), PreconditionError);
  }
  SUBCASE("result stays simple") {
    // u = 0 with neighbors 1, 2 that share neighbor 3 and have private ones.
    const Graph g(6, {Edge(0, 1), Edge(0, 2), Edge(1, 3), Edge(2, 3), Edge(1, 4), Edge(2, 5), Edge(4, 5)});
    const Graph c = contract_degree2(g, 0);
    CHECK(c.order() == 4);
    check_invariants(c);
    // merged vertex (label 0, was 1) sees 3, 4, 5 -> labels 1, 2, 3
    CHECK(c.neighbors(0) == (bit(1) | bit(2) | bit(3)));
  }
}

TEST_CASE("components") {
  CHECK(components(Graph(0)).empty());
  const auto one = components(cycle_graph(5));
  REQUIRE(one.size() == 1);
  CHECK(one[0].graph == cycle_graph(5));

  const auto parts = components(Graph(3, {Edge(0, 2)}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].graph == complete_graph(2));
  CHECK(parts[0].to_parent == std::vector<int>{0, 2});
  CHECK(parts[1].graph == Graph(1));
  CHECK(parts[1].to_parent == std::vector<int>{1});
}

TEST_CASE("named graphs") {
  CHECK(cube_graph().size() == 12);
  CHECK(petersen_graph().size() == 15);
  CHECK(is_bipartite(cube_graph()));
  CHECK_FALSE(is_bipartite(petersen_graph()));
  CHECK(is_odd_cycle(cycle_graph(7)));
  CHECK_FALSE(is_odd_cycle(cycle_graph(6)));
  CHECK_FALSE(is_odd_cycle(Graph(1)));
}

TEST_CASE("random surgery keeps the graph invariants") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) edges.emplace_back(u, v);
    const Graph g(n, edges);
    check_invariants(g);
    const Relabeled r = delete_vertex(g, static_cast<int>(rng() % n));
    check_invariants(r.graph);
    CHECK(r.graph.order() == n - 1);
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 2) {
        const Bits nb = g.neighbors(v);
        if (!g.has_edge(lowest(nb), lowest(nb & (nb - 1)))) {
          const Graph c = contract_degree2(g, v);
          CHECK(c.order() == n - 2);
          check_invariants(c);
        }
      }
    }
  }
}

#include "doctest.h"

#include <functional>

#include "critlab/canonical.hpp"
#include "critlab/errors.hpp"
#include "critlab/graph6.hpp"
#include "critlab/proof_lab.hpp"
#include "critlab/stability.hpp"
#include "oracles.hpp"

using namespace critlab;

namespace {

std::vector<Graph> corpus_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    const auto level = enumerate_connected(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// Triangle 0 1 2 hanging off a K4 on 3..6 that lacks the edge 3-5.
Graph gadget_host_k4() {
  return Graph(7, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(0, 3), Edge(1, 4), Edge(2, 5),
                   Edge(3, 4), Edge(3, 6), Edge(4, 5), Edge(4, 6), Edge(5, 6)});
}

// Triangle 0 1 2 whose removal plus the edge 3-4 leaves K4 with the branch
// path 5-3-4-6.
Graph gadget_host_subdivided() {
  return Graph(9, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(0, 3), Edge(1, 5), Edge(2, 4),
                   Edge(5, 3), Edge(4, 6), Edge(5, 7), Edge(5, 8), Edge(6, 7), Edge(6, 8),
                   Edge(7, 8)});
}

}  // namespace

TEST_CASE("claim names round-trip") {
  for (ClaimId id : all_claims()) CHECK(parse_claim(claim_name(id)) == id);
  CHECK_FALSE(parse_claim("bogus").has_value());
  CHECK(all_claims().size() == 10);
}

TEST_CASE("triangles") {
  CHECK(triangles(complete_graph(4)).size() == 4);
  CHECK(triangles(cycle_graph(5)).empty());
  CHECK(Triangle{0, 1, 2}.is_triangle_of(complete_graph(3)));
  CHECK_FALSE(Triangle{0, 1, 1}.is_triangle_of(complete_graph(3)));
  CHECK_FALSE(Triangle{0, 1, 5}.is_triangle_of(complete_graph(3)));
}

TEST_CASE("applicability") {
  CHECK(is_excluded_base_graph(Graph(1)));
  CHECK(is_excluded_base_graph(complete_graph(2)));
  CHECK(is_excluded_base_graph(cycle_graph(7)));
  CHECK(structure_theorem_applies(complete_graph(4)));
  CHECK_FALSE(triangle_theorem_applies(complete_graph(4)));
  CHECK(triangle_theorem_applies(complete_graph(5)));
  CHECK_FALSE(structure_theorem_applies(cycle_graph(6)));
}

TEST_CASE("theorem checks on named graphs") {
  CHECK(check_theorem1(complete_graph(5)).verdict == Verdict::pass);
  CHECK(check_theorem1(cycle_graph(5)).verdict == Verdict::inapplicable);
  CHECK(check_theorem1(path_graph(4)).verdict == Verdict::inapplicable);

  const auto k4 = check_theorem2_all(complete_graph(4));
  REQUIRE(k4.size() == 1);
  CHECK(k4[0].verdict == Verdict::inapplicable);

  CHECK(check_theorem2(complete_graph(5), Triangle{0, 1, 2}).verdict == Verdict::pass);
  CHECK_THROWS_AS(check_theorem2(complete_graph(5), Triangle{0, 1, 1}), PreconditionError);
  CHECK(check_theorem2_all(complete_graph(5)).size() == 10);
}

TEST_CASE("degree-2 lemma") {
  CHECK(check_lemma_deg2(complete_graph(4)).verdict != Verdict::fail);
  // A path is not alpha-critical, so the lemma does not apply.
  CHECK(check_lemma_deg2(path_graph(5)).verdict == Verdict::inapplicable);
}

TEST_CASE("claims 2 and 3 on named graphs") {
  for (int u = 0; u < 5; ++u) {
    CHECK(check_claim_delta(complete_graph(5), u).verdict == Verdict::pass);
    CHECK(check_claim_delta(cycle_graph(5), u).verdict == Verdict::inapplicable);
    CHECK(check_claim_uvw(complete_graph(5), u).verdict == Verdict::pass);
    CHECK(check_eq1_consistency(cycle_graph(5), u).verdict == Verdict::pass);
  }
}

TEST_CASE("case I rotation on C5") {
  const Case1Rotation r = case1_rotation(cycle_graph(5), 0, 4, 2, 1);
  CHECK(r.alpha_before == 2);
  CHECK(r.alpha_after == 2);
  CHECK(r.alpha_preserved());
  REQUIRE(r.triangle_formed.has_value());
  CHECK(*r.triangle_formed);
  CHECK(r.rotated.has_edge(0, 2));
  CHECK_FALSE(r.rotated.has_edge(0, 4));
}

TEST_CASE("case I preconditions") {
  const Graph c5 = cycle_graph(5);
  CHECK_THROWS_WITH_AS(case1_rotation(c5, 0, 2, 2), doctest::Contains("u2 equals v"), PreconditionError);
  CHECK_THROWS_WITH_AS(case1_rotation(c5, 0, 0, 2), doctest::Contains("must differ"), PreconditionError);
  CHECK_THROWS_WITH_AS(case1_rotation(c5, 0, 2, 3), doctest::Contains("u-u2 is absent"), PreconditionError);
  CHECK_THROWS_WITH_AS(case1_rotation(c5, 0, 4, 1), doctest::Contains("already present"), PreconditionError);
  CHECK(check_case1(c5).verdict == Verdict::pass);
}

TEST_CASE("case II gadget") {
  const Graph g = gadget_host_k4();
  const Case2Gadget gadget = case2_gadget(g, Triangle{0, 1, 2});
  CHECK(gadget.u_out == 3);
  CHECK(gadget.v_out == 4);
  CHECK(gadget.w_out == 5);
  CHECK(gadget.gadget.graph == complete_graph(4));
  CHECK(gadget.gadget.to_parent == std::vector<int>{3, 4, 5, 6});

  Tok4Certificate k4;
  k4.branch = {0, 1, 2, 3};
  for (int i = 0; i < 6; ++i) k4.paths[i] = {kBranchPairs[i].first, kBranchPairs[i].second};
  const Tok4Certificate up = lift_tok4_through_gadget(k4, gadget);
  const Graph minus_v = delete_vertex(g, 1).graph;
  CHECK(verify_tok4(minus_v, up));
  CHECK(oracle::certificate_is_tok4(minus_v, up.branch, up.paths));
  // ac was 3-5 in host labels, now 3 0 2 5, then relabeled for g - 1.
  CHECK(up.paths[1] == std::vector<int>{2, 0, 1, 4});

  Tok4Certificate bogus = k4;
  bogus.paths[0] = {0, 2, 1};
  CHECK_THROWS_AS(lift_tok4_through_gadget(bogus, gadget), PreconditionError);
}

TEST_CASE("case II lift splices into a branch path interior") {
  const Graph g = gadget_host_subdivided();
  const Case2Gadget gadget = case2_gadget(g, Triangle{0, 1, 2});
  CHECK(gadget.u_out == 3);
  CHECK(gadget.w_out == 4);
  const auto k = find_tok4(gadget.gadget.graph);
  REQUIRE(k.has_value());
  CHECK(k->edge_count() == 8);
  const Tok4Certificate up = lift_tok4_through_gadget(*k, gadget);
  CHECK(up.edge_count() == 10);
  const Graph minus_v = delete_vertex(g, 1).graph;
  CHECK(verify_tok4(minus_v, up));
  CHECK(oracle::certificate_is_tok4(minus_v, up.branch, up.paths));
}

TEST_CASE("case II preconditions") {
  CHECK_THROWS_WITH_AS(case2_gadget(gadget_host_k4(), Triangle{0, 1, 3}), doctest::Contains("not a triangle"),
                       PreconditionError);
  CHECK_THROWS_WITH_AS(case2_gadget(complete_graph(5), Triangle{0, 1, 2}), doctest::Contains("degree 4"),
                       PreconditionError);
  // Prism: outside neighbors 3, 4, 5 already form a triangle.
  const Graph prism(6, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(3, 4), Edge(3, 5), Edge(4, 5),
                        Edge(0, 3), Edge(1, 4), Edge(2, 5)});
  CHECK_THROWS_WITH_AS(case2_gadget(prism, Triangle{0, 1, 2}), doctest::Contains("already present"),
                       PreconditionError);
  // Triangle 0 1 2 whose vertices 0 and 1 both see 3.
  const Graph shared(5, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(0, 3), Edge(1, 3), Edge(2, 4),
                         Edge(3, 4)});
  CHECK_THROWS_WITH_AS(case2_gadget(shared, Triangle{0, 1, 2}), doctest::Contains("share"),
                       PreconditionError);
}

TEST_CASE("cube filter") {
  CHECK(cube_filter(cube_graph()));
  CHECK_FALSE(cube_filter(petersen_graph()));
  CHECK_FALSE(cube_filter(complete_graph(4)));
  CHECK(has_k23_subgraph(Graph(5, {Edge(0, 2), Edge(0, 3), Edge(0, 4), Edge(1, 2), Edge(1, 3), Edge(1, 4)})));
  CHECK_FALSE(is_alpha_critical(cube_graph()));
  CHECK(cube_uniqueness_check(corpus_up_to(5)).verdict == Verdict::inapplicable);
}

TEST_CASE("strengthening witness at seven vertices") {
  const auto corpus = corpus_up_to(7);
  const auto w = find_strengthening_witness(corpus);
  REQUIRE(w.has_value());
  CHECK(to_graph6(w->graph) == "FJa^O");
  CHECK(w->triangle.vertices() == std::array<int, 3>{0, 4, 5});
  CHECK(verify_strengthening_witness(*w));

  const auto tv = w->triangle.vertices();
  int with_tok4 = 0;
  for (int i = 0; i < 3; ++i) {
    const Graph rest = delete_vertex(w->graph, tv[i]).graph;
    const bool oracle_has = oracle::brute_has_tok4(rest);
    CHECK(oracle_has == w->deletions[i].has_value());
    if (w->deletions[i]) {
      ++with_tok4;
      CHECK(oracle::certificate_is_tok4(w->graph, w->deletions[i]->branch, w->deletions[i]->paths));
      CHECK((w->deletions[i]->vertex_mask() & bit(tv[i])) == 0);
    }
  }
  CHECK(with_tok4 == 2);

  CHECK_FALSE(find_strengthening_witness(corpus_up_to(6)).has_value());
}

TEST_CASE("run_claim over a small corpus") {
  const auto corpus = corpus_up_to(5);
  const auto reports = run_claim(ClaimId::claim3, corpus);
  CHECK(std::is_sorted(reports.begin(), reports.end(),
                       [](const ClaimReport& a, const ClaimReport& b) { return a.graph6 < b.graph6; }));
  for (const ClaimReport& r : reports) {
    CHECK(r.verdict != Verdict::fail);
    if (r.verdict == Verdict::fail) CHECK(r.witness.has_value());
  }
  const auto none = run_claim(ClaimId::witness, corpus);
  REQUIRE(none.size() == 1);
  CHECK(none[0].verdict == Verdict::inapplicable);
  CHECK((*none[0].witness)["max_order"] == 5);
}

TEST_CASE("every certificate attached to a report verifies in the report's graph") {
  const auto corpus = corpus_up_to(7);
  int certificates = 0;
  std::function<void(const Graph&, const Json&)> walk = [&](const Graph& g, const Json& j) {
    if (j.is_object()) {
      for (const auto& [key, value] : j.items()) {
        if (key == "certificate" && value.is_object()) {
          ++certificates;
          const Tok4Certificate cert = tok4_from_json(value);
          CHECK(verify_tok4(g, cert));
          CHECK(oracle::certificate_is_tok4(g, cert.branch, cert.paths));
        } else {
          walk(g, value);
        }
      }
    } else if (j.is_array()) {
      for (const Json& item : j) walk(g, item);
    }
  };
  for (ClaimId id : all_claims()) {
    for (const ClaimReport& r : run_claim(id, corpus)) {
      CHECK(r.verdict != Verdict::fail);
      if (r.witness && !r.graph6.empty()) walk(parse_graph6(r.graph6), *r.witness);
    }
  }
  CHECK(certificates > 100);
}

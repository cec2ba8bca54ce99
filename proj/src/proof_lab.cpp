#include "critlab/proof_lab.hpp"

#include <algorithm>
#include <set>

#include "critlab/canonical.hpp"
#include "critlab/errors.hpp"
#include "critlab/graph6.hpp"
#include "critlab/parallel.hpp"
#include "critlab/stability.hpp"

namespace critlab {

namespace {

constexpr std::array<std::pair<ClaimId, std::string_view>, 10> kClaimNames{{
    {ClaimId::theorem1, "theorem1"},
    {ClaimId::theorem2, "theorem2"},
    {ClaimId::lemma1, "lemma1"},
    {ClaimId::claim2, "claim2"},
    {ClaimId::claim3, "claim3"},
    {ClaimId::eq1_consistency, "eq1_consistency"},
    {ClaimId::case1, "case1"},
    {ClaimId::case2, "case2"},
    {ClaimId::cube, "cube"},
    {ClaimId::witness, "witness"},
}};

ClaimReport report(ClaimId id, const Graph& g, Verdict verdict, std::optional<Json> witness = {}) {
  return {id, to_graph6(g), verdict, std::move(witness)};
}

Json reason(std::string_view text) { return Json{{"reason", text}}; }

bool connected_alpha_critical(const Graph& g) { return g.is_connected() && is_alpha_critical(g); }

std::optional<Tok4Certificate> find_tok4_avoiding(const Graph& g, int x) {
  const Relabeled rest = delete_vertex(g, x);
  auto cert = find_tok4(rest.graph);
  if (!cert) return std::nullopt;
  return relabel(*cert, rest.to_parent);
}

Json edge_json(Edge e) { return Json::array({e.u, e.v}); }

std::set<Edge> edge_set(const std::vector<Edge>& edges) { return {edges.begin(), edges.end()}; }

}  // namespace

std::string_view claim_name(ClaimId id) {
  for (const auto& [claim, name] : kClaimNames)
    if (claim == id) return name;
  return "unknown";
}

std::optional<ClaimId> parse_claim(std::string_view name) {
  for (const auto& [claim, text] : kClaimNames)
    if (text == name) return claim;
  return std::nullopt;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "unknown";
}

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> ids = [] {
    std::vector<ClaimId> out;
    for (const auto& entry : kClaimNames) out.push_back(entry.first);
    return out;
  }();
  return ids;
}

Json to_json(const ClaimReport& r) {
  return Json{{"claim", claim_name(r.claim)},
              {"graph6", r.graph6},
              {"verdict", verdict_name(r.verdict)},
              {"witness", r.witness ? *r.witness : Json(nullptr)}};
}

bool Triangle::is_triangle_of(const Graph& g) const {
  auto ok = [&](int x) { return x >= 0 && x < g.order(); };
  if (!ok(x1) || !ok(x2) || !ok(x3)) return false;
  if (x1 == x2 || x1 == x3 || x2 == x3) return false;
  return g.has_edge(x1, x2) && g.has_edge(x1, x3) && g.has_edge(x2, x3);
}

std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (const Edge& e : g.edges()) {
    const Bits common = g.neighbors(e.u) & g.neighbors(e.v) & ~low_bits(e.v + 1);
    for_each_bit(common, [&](int x) { out.push_back({e.u, e.v, x}); });
  }
  return out;
}

bool is_excluded_base_graph(const Graph& g) {
  return g.order() == 1 || (g.order() == 2 && g.size() == 1) || is_odd_cycle(g);
}

bool structure_theorem_applies(const Graph& g) {
  return g.order() > 0 && !is_excluded_base_graph(g) && connected_alpha_critical(g);
}

bool triangle_theorem_applies(const Graph& g) {
  return structure_theorem_applies(g) && !is_tok4_graph(g);
}

ClaimReport check_theorem1(const Graph& g) {
  if (g.order() == 0 || !g.is_connected()) return report(ClaimId::theorem1, g, Verdict::inapplicable, reason("not connected"));
  if (is_excluded_base_graph(g)) return report(ClaimId::theorem1, g, Verdict::inapplicable, reason("K1, K2 or odd cycle"));
  if (!is_alpha_critical(g)) return report(ClaimId::theorem1, g, Verdict::inapplicable, reason("not alpha-critical"));
  const auto cert = find_tok4(g);
  if (cert && verify_tok4(g, *cert)) {
    return report(ClaimId::theorem1, g, Verdict::pass, Json{{"certificate", to_json(*cert)}});
  }
  return report(ClaimId::theorem1, g, Verdict::fail,
                reason("no totally odd K4-subdivision in a connected alpha-critical graph"));
}

ClaimReport check_theorem2(const Graph& g, const Triangle& t) {
  if (!t.is_triangle_of(g)) throw PreconditionError("check_theorem2: not a triangle of the graph");
  if (!triangle_theorem_applies(g)) {
    return report(ClaimId::theorem2, g, Verdict::inapplicable, reason("hypothesis not met"));
  }
  Json deletions = Json::array();
  int found = 0;
  for (int x : t.vertices()) {
    const auto cert = find_tok4_avoiding(g, x);
    if (cert) ++found;
    deletions.push_back(Json{{"vertex", x}, {"certificate", cert ? to_json(*cert) : Json(nullptr)}});
  }
  Json witness{{"triangle", t.vertices()}, {"deletions", std::move(deletions)}};
  return report(ClaimId::theorem2, g, found >= 2 ? Verdict::pass : Verdict::fail, std::move(witness));
}

std::vector<ClaimReport> check_theorem2_all(const Graph& g) {
  if (!triangle_theorem_applies(g)) {
    return {report(ClaimId::theorem2, g, Verdict::inapplicable, reason("hypothesis not met"))};
  }
  const std::vector<Triangle> ts = triangles(g);
  if (ts.empty()) return {report(ClaimId::theorem2, g, Verdict::inapplicable, reason("no triangles"))};
  std::vector<ClaimReport> out;
  for (const Triangle& t : ts) out.push_back(check_theorem2(g, t));
  return out;
}

ClaimReport check_lemma_deg2(const Graph& g) {
  if (g.order() < 4 || !connected_alpha_critical(g)) {
    return report(ClaimId::lemma1, g, Verdict::inapplicable,
                  reason("needs a connected alpha-critical graph on at least 4 vertices"));
  }
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) {
      return report(ClaimId::lemma1, g, Verdict::fail, Json{{"vertex", v}, {"degree", g.degree(v)}});
    }
  }
  const int a = alpha(g);
  Json checked = Json::array();
  for (int u = 0; u < g.order(); ++u) {
    if (g.degree(u) != 2) continue;
    const Bits nb = g.neighbors(u);
    const int v = lowest(nb);
    const int w = lowest(nb & (nb - 1));
    Json detail{{"vertex", u}, {"neighbors", {v, w}}};
    if (g.has_edge(v, w)) {
      detail["failure"] = "neighbors adjacent";
      return report(ClaimId::lemma1, g, Verdict::fail, std::move(detail));
    }
    const Bits common = g.neighbors(v) & g.neighbors(w);
    if (common != bit(u)) {
      detail["failure"] = "extra common neighbor";
      detail["common"] = VertexSet{common}.members();
      return report(ClaimId::lemma1, g, Verdict::fail, std::move(detail));
    }
    const Graph contracted = contract_degree2(g, u);
    if (!is_alpha_critical(contracted) || alpha(contracted) != a - 1) {
      detail["failure"] = "contraction";
      detail["contracted"] = to_graph6(contracted);
      return report(ClaimId::lemma1, g, Verdict::fail, std::move(detail));
    }
    checked.push_back(u);
  }
  return report(ClaimId::lemma1, g, Verdict::pass, Json{{"degree2_vertices", std::move(checked)}});
}

ClaimReport check_claim_delta(const Graph& g, int u) {
  if (!connected_alpha_critical(g)) {
    return report(ClaimId::claim2, g, Verdict::inapplicable, reason("not connected alpha-critical"));
  }
  const int delta = g_minus_c(g, u).graph.max_degree();
  Json detail{{"vertex", u}, {"max_degree", delta}};
  if (delta <= 2) return report(ClaimId::claim2, g, Verdict::inapplicable, std::move(detail));
  const auto cert = find_tok4_avoiding(g, u);
  if (!cert) return report(ClaimId::claim2, g, Verdict::fail, std::move(detail));
  detail["certificate"] = to_json(*cert);
  return report(ClaimId::claim2, g, Verdict::pass, std::move(detail));
}

ClaimReport check_claim_uvw(const Graph& g, int u) {
  if (!connected_alpha_critical(g)) {
    return report(ClaimId::claim3, g, Verdict::inapplicable, reason("not connected alpha-critical"));
  }
  const std::set<Edge> reduced = edge_set(g_minus_c_edges(g, u));
  int checked = 0;
  for (const Edge& e : g.edges()) {
    if (e.touches(u)) continue;
    if (!g.has_edge(u, e.u) && !g.has_edge(u, e.v)) continue;
    ++checked;
    if (!reduced.contains(e)) {
      return report(ClaimId::claim3, g, Verdict::fail, Json{{"vertex", u}, {"missing_edge", edge_json(e)}});
    }
  }
  return report(ClaimId::claim3, g, Verdict::pass, Json{{"vertex", u}, {"checked_edges", checked}});
}

ClaimReport check_eq1_consistency(const Graph& g, int u) {
  if (!connected_alpha_critical(g)) {
    return report(ClaimId::eq1_consistency, g, Verdict::inapplicable, reason("not connected alpha-critical"));
  }
  const std::vector<Edge> by_critical = g_minus_c_edges(g, u);
  const std::vector<Edge> by_stable_sets = g_minus_c_edges_by_stable_sets(g, u);
  if (by_critical == by_stable_sets) {
    return report(ClaimId::eq1_consistency, g, Verdict::pass,
                  Json{{"vertex", u}, {"edges", to_json(by_critical)}});
  }
  return report(ClaimId::eq1_consistency, g, Verdict::fail,
                Json{{"vertex", u},
                     {"critical_route", to_json(by_critical)},
                     {"stable_set_route", to_json(by_stable_sets)}});
}

Case1Rotation case1_rotation(const Graph& g, int u, int u2, int v, std::optional<int> w) {
  if (u2 == v) throw PreconditionError("case1_rotation: u2 equals v");
  if (u == v || u == u2) throw PreconditionError("case1_rotation: u must differ from u2 and v");
  if (!g.has_edge(u, u2)) throw PreconditionError("case1_rotation: edge u-u2 is absent");
  if (g.has_edge(u, v)) throw PreconditionError("case1_rotation: edge u-v already present");
  Case1Rotation out;
  out.rotated = add_edge(delete_edge(g, Edge(u, u2)), Edge(u, v));
  out.alpha_before = alpha(g);
  out.alpha_after = alpha(out.rotated);
  if (w) out.triangle_formed = Triangle{u, v, *w}.is_triangle_of(out.rotated);
  return out;
}

ClaimReport check_case1(const Graph& g) {
  if (g.order() < 3 || !connected_alpha_critical(g)) {
    return report(ClaimId::case1, g, Verdict::inapplicable, reason("not connected alpha-critical"));
  }
  const int n = g.order();
  std::vector<std::set<Edge>> reduced(n);
  for (int x = 0; x < n; ++x) reduced[x] = edge_set(g_minus_c_edges(g, x));

  int configurations = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v || g.has_edge(u, v)) continue;
      for (int u2 = 0; u2 < n; ++u2) {
        if (u2 == v || !g.has_edge(u, u2) || reduced[v].contains(Edge(u, u2))) continue;
        ++configurations;
        const Case1Rotation rot = case1_rotation(g, u, u2, v);
        Json detail{{"u", u}, {"u2", u2}, {"v", v}};
        if (!rot.alpha_preserved()) {
          detail["alpha_before"] = rot.alpha_before;
          detail["alpha_after"] = rot.alpha_after;
          return report(ClaimId::case1, g, Verdict::fail, std::move(detail));
        }
        const std::set<Edge> critical = edge_set(critical_edges(rot.rotated).edges);
        std::set<Edge> required = reduced[u];
        required.insert(reduced[v].begin(), reduced[v].end());
        required.insert(Edge(u, v));
        for (const Edge& e : required) {
          if (!critical.contains(e)) {
            detail["not_critical"] = edge_json(e);
            return report(ClaimId::case1, g, Verdict::fail, std::move(detail));
          }
        }
      }
    }
  }
  if (configurations == 0) {
    return report(ClaimId::case1, g, Verdict::inapplicable, reason("no rotation configuration"));
  }
  return report(ClaimId::case1, g, Verdict::pass, Json{{"configurations", configurations}});
}

Case2Gadget case2_gadget(const Graph& g, const Triangle& t) {
  if (!t.is_triangle_of(g)) throw PreconditionError("case2_gadget: not a triangle");
  const Bits tri = bit(t.x1) | bit(t.x2) | bit(t.x3);
  std::array<int, 3> outside{};
  const auto roles = t.vertices();
  for (int i = 0; i < 3; ++i) {
    if (g.degree(roles[i]) != 3) {
      throw PreconditionError("case2_gadget: triangle vertex " + std::to_string(roles[i]) +
                              " has degree " + std::to_string(g.degree(roles[i])));
    }
    outside[i] = lowest(g.neighbors(roles[i]) & ~tri);
  }
  if (outside[0] == outside[1] || outside[0] == outside[2] || outside[1] == outside[2]) {
    throw PreconditionError("case2_gadget: triangle vertices share an outside neighbor");
  }
  if (g.has_edge(outside[0], outside[2])) {
    throw PreconditionError("case2_gadget: edge u'w' already present");
  }
  Case2Gadget out;
  out.host = g;
  out.roles = t;
  out.u_out = outside[0];
  out.v_out = outside[1];
  out.w_out = outside[2];
  out.gadget = delete_vertices(g, tri);
  const std::vector<int> inv = out.gadget.from_parent(g.order());
  out.gadget.graph = add_edge(out.gadget.graph, Edge(inv[out.u_out], inv[out.w_out]));
  out.alpha_host = alpha(g);
  out.alpha_gadget = alpha(out.gadget.graph);
  return out;
}

Tok4Certificate lift_tok4_through_gadget(const Tok4Certificate& k, const Case2Gadget& gadget) {
  if (!verify_tok4(gadget.gadget.graph, k)) {
    throw PreconditionError("lift_tok4_through_gadget: certificate does not verify in the gadget graph");
  }
  const Tok4Certificate in_host = relabel(k, gadget.gadget.to_parent);
  const int u = gadget.roles.x1;
  const int w = gadget.roles.x3;
  Tok4Certificate lifted;
  lifted.branch = in_host.branch;
  for (std::size_t p = 0; p < in_host.paths.size(); ++p) {
    const std::vector<int>& path = in_host.paths[p];
    std::vector<int>& out = lifted.paths[p];
    for (std::size_t i = 0; i < path.size(); ++i) {
      out.push_back(path[i]);
      if (i + 1 == path.size()) break;
      if (path[i] == gadget.u_out && path[i + 1] == gadget.w_out) {
        out.insert(out.end(), {u, w});
      } else if (path[i] == gadget.w_out && path[i + 1] == gadget.u_out) {
        out.insert(out.end(), {w, u});
      }
    }
  }
  const Relabeled minus_v = delete_vertex(gadget.host, gadget.roles.x2);
  return relabel(lifted, minus_v.from_parent(gadget.host.order()));
}

ClaimReport check_case2(const Graph& g) {
  if (!connected_alpha_critical(g)) {
    return report(ClaimId::case2, g, Verdict::inapplicable, reason("not connected alpha-critical"));
  }
  int configurations = 0;
  int lifted = 0;
  for (const Triangle& t : triangles(g)) {
    const auto tv = t.vertices();
    for (int role = 0; role < 3; ++role) {
      const Triangle roles{tv[(role + 1) % 3], tv[role], tv[(role + 2) % 3]};
      Case2Gadget gadget;
      try {
        gadget = case2_gadget(g, roles);
      } catch (const PreconditionError&) {
        continue;
      }
      ++configurations;
      Json detail{{"triangle", roles.vertices()}, {"outside", {gadget.u_out, gadget.v_out, gadget.w_out}}};
      if (!gadget.alpha_drops_by_one()) {
        detail["alpha_host"] = gadget.alpha_host;
        detail["alpha_gadget"] = gadget.alpha_gadget;
        return report(ClaimId::case2, g, Verdict::fail, std::move(detail));
      }
      std::set<Edge> critical;
      for (const Edge& e : critical_edges(gadget.gadget.graph).edges) {
        critical.emplace(gadget.gadget.to_parent[e.u], gadget.gadget.to_parent[e.v]);
      }
      const Bits tri = bit(roles.x1) | bit(roles.x2) | bit(roles.x3);
      std::set<Edge> required{Edge(gadget.u_out, gadget.w_out)};
      for (int x : {gadget.u_out, gadget.w_out}) {
        for (const Edge& e : g_minus_c_edges(g, x)) {
          if (((bit(e.u) | bit(e.v)) & tri) == 0) required.insert(e);
        }
      }
      for (const Edge& e : required) {
        if (!critical.contains(e)) {
          detail["not_critical"] = edge_json(e);
          return report(ClaimId::case2, g, Verdict::fail, std::move(detail));
        }
      }
      if (const auto k = find_tok4(gadget.gadget.graph)) {
        const Tok4Certificate up = lift_tok4_through_gadget(*k, gadget);
        if (!verify_tok4(delete_vertex(g, roles.x2).graph, up)) {
          detail["lift_failed"] = to_json(*k);
          return report(ClaimId::case2, g, Verdict::fail, std::move(detail));
        }
        ++lifted;
      }
    }
  }
  if (configurations == 0) {
    return report(ClaimId::case2, g, Verdict::inapplicable, reason("no triangle meets the gadget preconditions"));
  }
  return report(ClaimId::case2, g, Verdict::pass,
                Json{{"configurations", configurations}, {"lifted", lifted}});
}

bool is_cubic(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3) return false;
  return g.order() > 0;
}

bool is_triangle_free(const Graph& g) { return triangles(g).empty(); }

bool has_k23_subgraph(const Graph& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (count(g.neighbors(a) & g.neighbors(b)) >= 3) return true;
  return false;
}

bool incident_edges_on_common_4cycle(const Graph& g) {
  for (int w = 0; w < g.order(); ++w) {
    const Bits nb = g.neighbors(w);
    for (int u = 0; u < g.order(); ++u) {
      if (!((nb >> u) & 1U)) continue;
      for (int v = u + 1; v < g.order(); ++v) {
        if (!((nb >> v) & 1U)) continue;
        // A 4-cycle u w v x needs a common neighbor x of u and v besides w.
        if ((g.neighbors(u) & g.neighbors(v) & ~bit(w)) == 0) return false;
      }
    }
  }
  return true;
}

bool cube_filter(const Graph& g) {
  return g.is_connected() && is_cubic(g) && is_triangle_free(g) && !has_k23_subgraph(g) &&
         incident_edges_on_common_4cycle(g);
}

ClaimReport cube_uniqueness_check(std::span<const Graph> corpus) {
  int max_order = 0;
  std::vector<Graph> survivors;
  for (const Graph& g : corpus) {
    max_order = std::max(max_order, g.order());
    if (cube_filter(g)) survivors.push_back(g);
  }
  const Graph cube = cube_graph();
  if (max_order < cube.order()) {
    return {ClaimId::cube, "", Verdict::inapplicable,
            Json{{"reason", "corpus stops below 8 vertices"}, {"max_order", max_order}}};
  }
  Json codes = Json::array();
  for (const Graph& g : survivors) codes.push_back(to_graph6(g));
  const bool cube_critical = is_alpha_critical(cube);
  Json witness{{"max_order", max_order}, {"survivors", std::move(codes)}, {"cube_alpha_critical", cube_critical}};
  const bool unique = survivors.size() == 1 && isomorphic(survivors.front(), cube);
  ClaimReport r{ClaimId::cube, survivors.size() == 1 ? to_graph6(survivors.front()) : std::string{},
                unique && !cube_critical ? Verdict::pass : Verdict::fail, std::move(witness)};
  return r;
}

std::optional<StrengtheningWitness> find_strengthening_witness(std::span<const Graph> corpus) {
  for (const Graph& g : corpus) {
    if (triangles(g).empty() || !triangle_theorem_applies(g)) continue;
    for (const Triangle& t : triangles(g)) {
      StrengtheningWitness w{g, t, {}};
      int found = 0;
      const auto tv = t.vertices();
      for (int i = 0; i < 3; ++i) {
        w.deletions[i] = find_tok4_avoiding(g, tv[i]);
        if (w.deletions[i]) ++found;
      }
      if (found == 2) return w;
    }
  }
  return std::nullopt;
}

bool verify_strengthening_witness(const StrengtheningWitness& w) {
  if (!w.triangle.is_triangle_of(w.graph) || !triangle_theorem_applies(w.graph)) return false;
  int found = 0;
  const auto tv = w.triangle.vertices();
  for (int i = 0; i < 3; ++i) {
    const Relabeled rest = delete_vertex(w.graph, tv[i]);
    if (w.deletions[i]) {
      const Tok4Certificate& cert = *w.deletions[i];
      if (!verify_tok4(w.graph, cert) || (cert.vertex_mask() & bit(tv[i])) != 0) return false;
      ++found;
    } else if (contains_tok4(rest.graph)) {
      return false;
    }
  }
  return found == 2;
}

std::vector<ClaimReport> run_claim(ClaimId id, std::span<const Graph> corpus) {
  auto per_vertex = [&](auto check) {
    return parallel_map(corpus, [&](const Graph& g) {
      std::vector<ClaimReport> out;
      if (g.order() == 0 || !connected_alpha_critical(g)) {
        out.push_back(report(id, g, Verdict::inapplicable, reason("not connected alpha-critical")));
        return out;
      }
      for (int u = 0; u < g.order(); ++u) out.push_back(check(g, u));
      return out;
    });
  };
  auto per_graph = [&](auto check) {
    return parallel_map(corpus, [&](const Graph& g) { return std::vector<ClaimReport>{check(g)}; });
  };

  std::vector<std::vector<ClaimReport>> nested;
  switch (id) {
    case ClaimId::theorem1: nested = per_graph(check_theorem1); break;
    case ClaimId::theorem2:
      nested = parallel_map(corpus, [](const Graph& g) { return check_theorem2_all(g); });
      break;
    case ClaimId::lemma1: nested = per_graph(check_lemma_deg2); break;
    case ClaimId::claim2: nested = per_vertex(check_claim_delta); break;
    case ClaimId::claim3: nested = per_vertex(check_claim_uvw); break;
    case ClaimId::eq1_consistency: nested = per_vertex(check_eq1_consistency); break;
    case ClaimId::case1: nested = per_graph(check_case1); break;
    case ClaimId::case2: nested = per_graph(check_case2); break;
    case ClaimId::cube: nested = {{cube_uniqueness_check(corpus)}}; break;
    case ClaimId::witness: {
      int max_order = 0;
      for (const Graph& g : corpus) max_order = std::max(max_order, g.order());
      const auto w = find_strengthening_witness(corpus);
      if (!w) {
        nested = {{ClaimReport{id, "", Verdict::inapplicable,
                               Json{{"reason", "none in range"},
                                    {"max_order", max_order},
                                    {"graphs_searched", corpus.size()}}}}};
        break;
      }
      Json deletions = Json::array();
      const auto tv = w->triangle.vertices();
      for (int i = 0; i < 3; ++i) {
        deletions.push_back(Json{{"vertex", tv[i]},
                                 {"certificate", w->deletions[i] ? to_json(*w->deletions[i]) : Json(nullptr)}});
      }
      const bool ok = verify_strengthening_witness(*w);
      nested = {{report(id, w->graph, ok ? Verdict::pass : Verdict::fail,
                        Json{{"triangle", tv}, {"deletions", std::move(deletions)}, {"max_order", max_order}})}};
      break;
    }
  }

  std::vector<ClaimReport> out;
  for (auto& group : nested)
    for (auto& r : group) out.push_back(std::move(r));
  std::stable_sort(out.begin(), out.end(),
                   [](const ClaimReport& a, const ClaimReport& b) { return a.graph6 < b.graph6; });
  return out;
}

}  // namespace critlab

#include "critlab/stability.hpp"

#include <algorithm>
#include <string>

#include "critlab/errors.hpp"

namespace critlab {

namespace {

class AlphaSearch {
 public:
  explicit AlphaSearch(const Graph& g) : g_(g) {
    best_ = greedy();
    search(g.vertices(), 0);
  }

  VertexSet best() const { return {best_}; }

 private:
  Bits greedy() const {
    Bits cand = g_.vertices();
    Bits chosen = 0;
    while (cand != 0) {
      int pick = -1;
      int pick_deg = Graph::kMaxOrder + 1;
      for_each_bit(cand, [&](int x) {
        const int d = count(g_.neighbors(x) & cand);
        if (d < pick_deg) {
          pick = x;
          pick_deg = d;
        }
      });
      chosen |= bit(pick);
      cand &= ~(bit(pick) | g_.neighbors(pick));
    }
    return chosen;
  }

  void search(Bits cand, Bits chosen) {
    if (cand == 0) {
      if (count(chosen) > count(best_)) best_ = chosen;
      return;
    }
    int pivot = -1;
    int max_deg = -1;
    int twice_m = 0;
    for_each_bit(cand, [&](int x) {
      const int d = count(g_.neighbors(x) & cand);
      twice_m += d;
      if (d > max_deg) {
        max_deg = d;
        pivot = x;
      }
    });
    if (max_deg == 0) {
      if (count(chosen | cand) > count(best_)) best_ = chosen | cand;
      return;
    }
    const int m = twice_m / 2;
    const int bound = count(cand) - (m + max_deg - 1) / max_deg;
    if (count(chosen) + bound <= count(best_)) return;

    search(cand & ~(bit(pivot) | g_.neighbors(pivot)), chosen | bit(pivot));
    search(cand & ~bit(pivot), chosen);
  }

  const Graph& g_;
  Bits best_ = 0;
};

void list_stable_sets(const Graph& g, int target, int next, Bits cand, Bits chosen,
                      std::vector<VertexSet>& out) {
  if (count(chosen) == target) {
    out.push_back({chosen});
    return;
  }
  if (count(chosen) + count(cand & ~low_bits(next)) < target) return;
  for (int v = next; v < g.order(); ++v) {
    if (!((cand >> v) & 1U)) continue;
    list_stable_sets(g, target, v + 1, cand & ~(bit(v) | g.neighbors(v)), chosen | bit(v), out);
  }
}

}  // namespace

bool is_stable(const Graph& g, VertexSet s) {
  bool ok = (s.bits & ~g.vertices()) == 0;
  if (ok) for_each_bit(s.bits, [&](int v) { ok = ok && (g.neighbors(v) & s.bits) == 0; });
  return ok;
}

VertexSet max_stable_set(const Graph& g) { return AlphaSearch(g).best(); }

int alpha(const Graph& g) { return max_stable_set(g).size(); }

std::vector<VertexSet> all_max_stable_sets(const Graph& g) {
  if (g.order() > kMaxStableSetListingOrder) {
    throw SizeLimitError("all_max_stable_sets is limited to " +
                         std::to_string(kMaxStableSetListingOrder) + " vertices");
  }
  std::vector<VertexSet> out;
  list_stable_sets(g, alpha(g), 0, g.vertices(), 0, out);
  return out;
}

bool is_edge_critical(const Graph& g, Edge e) {
  return alpha(delete_edge(g, e)) > alpha(g);
}

CriticalEdgeSet critical_edges(const Graph& g) {
  const int a = alpha(g);
  CriticalEdgeSet out{g, {}};
  for (const Edge& e : g.edges()) {
    if (alpha(g.without_edge(e)) > a) out.edges.push_back(e);
  }
  return out;
}

bool is_alpha_critical(const Graph& g) {
  const int a = alpha(g);
  const std::vector<Edge> edges = g.edges();
  return std::all_of(edges.begin(), edges.end(),
                     [&](const Edge& e) { return alpha(g.without_edge(e)) > a; });
}

Graph critical_subgraph(const Graph& g) {
  // A critical edge stays critical once other edges are removed without
  // changing alpha, so one pass in lexicographic order deletes exactly the
  // edges the repeated smallest-first rule would.
  const int a = alpha(g);
  Graph h = g;
  for (const Edge& e : g.edges()) {
    Graph candidate = h.without_edge(e);
    if (alpha(candidate) == a) h = candidate;
  }
  return h;
}

Relabeled g_minus_c(const Graph& g, int u) {
  if (!g.is_connected()) throw PreconditionError("g_minus_c: graph is not connected");
  if (!is_alpha_critical(g)) throw PreconditionError("g_minus_c: graph is not alpha-critical");
  Relabeled rest = delete_vertex(g, u);
  const CriticalEdgeSet crit = critical_edges(rest.graph);
  rest.graph = Graph(rest.graph.order(), crit.edges);
  return rest;
}

std::vector<Edge> g_minus_c_edges(const Graph& g, int u) {
  const Relabeled h = g_minus_c(g, u);
  std::vector<Edge> out;
  for (const Edge& e : h.graph.edges()) out.emplace_back(h.to_parent[e.u], h.to_parent[e.v]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> g_minus_c_edges_by_stable_sets(const Graph& g, int u) {
  if (!g.is_connected()) throw PreconditionError("g_minus_c: graph is not connected");
  if (!is_alpha_critical(g)) throw PreconditionError("g_minus_c: graph is not alpha-critical");
  const int a = alpha(g);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    const Graph minus_e = g.without_edge(e);
    const std::vector<VertexSet> sets = all_max_stable_sets(minus_e);
    if (static_cast<int>(sets.front().size()) <= a) continue;  // e not critical
    if (std::any_of(sets.begin(), sets.end(), [&](VertexSet s) { return !s.contains(u); })) {
      out.push_back(e);
    }
  }
  return out;
}

StableSetCertificate peel_max_stable_set(const Graph& g) {
  const int a = alpha(g);
  Relabeled current{g, {}};
  for (int v = 0; v < g.order(); ++v) current.to_parent.push_back(v);
  for (;;) {
    int removable = -1;
    for (int v = 0; v < current.graph.order() && removable < 0; ++v) {
      if (alpha(delete_vertex(current.graph, v).graph) == a) removable = v;
    }
    if (removable < 0) break;
    Relabeled next = delete_vertex(current.graph, removable);
    for (int& x : next.to_parent) x = current.to_parent[x];
    current = std::move(next);
  }
  Bits survivors = 0;
  for (int x : current.to_parent) survivors |= bit(x);
  return {g, {survivors}, a};
}

bool verify_stable_set(const StableSetCertificate& cert) {
  return is_stable(cert.host, cert.set) && cert.set.size() == cert.claimed_alpha &&
         cert.claimed_alpha == alpha(cert.host);
}

}  // namespace critlab

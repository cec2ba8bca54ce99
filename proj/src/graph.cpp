#include "critlab/graph.hpp"

#include <algorithm>
#include <string>

#include "critlab/errors.hpp"

namespace critlab {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw PreconditionError("loop edge at vertex " + std::to_string(a));
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for_each_bit(bits, [&](int v) { out.push_back(v); });
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder) {
    throw PreconditionError("graph order " + std::to_string(n) + " outside 0.." +
                            std::to_string(kMaxOrder));
  }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
  }
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(n_));
  }
}

int Graph::size() const noexcept {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += count(adj_[v]);
  return twice / 2;
}

Bits Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1U;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_bit(adj_[u] & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, count(adj_[v]));
  return best;
}

int Graph::min_degree() const noexcept {
  if (n_ == 0) return 0;
  int best = kMaxOrder;
  for (int v = 0; v < n_; ++v) best = std::min(best, count(adj_[v]));
  return best;
}

bool Graph::is_connected() const noexcept {
  if (n_ == 0) return true;
  return component_of(*this, 0) == vertices();
}

Graph Graph::with_edge(Edge e) const {
  check_vertex(e.u);
  check_vertex(e.v);
  Graph out = *this;
  out.adj_[e.u] |= bit(e.v);
  out.adj_[e.v] |= bit(e.u);
  return out;
}

Graph Graph::without_edge(Edge e) const {
  check_vertex(e.u);
  check_vertex(e.v);
  Graph out = *this;
  out.adj_[e.u] &= ~bit(e.v);
  out.adj_[e.v] &= ~bit(e.u);
  return out;
}

std::vector<int> Relabeled::from_parent(int parent_order) const {
  std::vector<int> inv(parent_order, -1);
  for (int v = 0; v < static_cast<int>(to_parent.size()); ++v) inv[to_parent[v]] = v;
  return inv;
}

Relabeled induced_subgraph(const Graph& g, Bits kept) {
  kept &= g.vertices();
  Relabeled out{Graph(count(kept)), {}};
  for_each_bit(kept, [&](int v) { out.to_parent.push_back(v); });
  const std::vector<int> inv = out.from_parent(g.order());
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (inv[e.u] >= 0 && inv[e.v] >= 0) edges.emplace_back(inv[e.u], inv[e.v]);
  }
  out.graph = Graph(count(kept), edges);
  return out;
}

Relabeled delete_vertices(const Graph& g, Bits removed) {
  return induced_subgraph(g, g.vertices() & ~removed);
}

Relabeled delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw PreconditionError("delete_vertex: vertex " + std::to_string(v) + " out of range");
  }
  return delete_vertices(g, bit(v));
}

Graph delete_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e)) {
    throw PreconditionError("delete_edge: edge " + std::to_string(e.u) + "-" +
                            std::to_string(e.v) + " is absent");
  }
  return g.without_edge(e);
}

Graph add_edge(const Graph& g, Edge e) {
  if (g.has_edge(e)) {
    throw PreconditionError("add_edge: edge " + std::to_string(e.u) + "-" +
                            std::to_string(e.v) + " already present");
  }
  return g.with_edge(e);
}

Graph contract_degree2(const Graph& g, int u) {
  if (g.degree(u) != 2) {
    throw PreconditionError("contract_degree2: vertex " + std::to_string(u) +
                            " has degree " + std::to_string(g.degree(u)));
  }
  const Bits nb = g.neighbors(u);
  const int v = lowest(nb);
  const int w = lowest(nb & (nb - 1));
  if (g.has_edge(v, w)) {
    throw PreconditionError("contract_degree2: neighbors " + std::to_string(v) + " and " +
                            std::to_string(w) + " are adjacent");
  }
  const Bits merged_nb = (g.neighbors(v) | g.neighbors(w)) & ~(bit(u) | bit(v) | bit(w));
  Graph merged = g;
  for (const Edge& e : g.edges()) {
    if (e.touches(u) || e.touches(w)) merged = merged.without_edge(e);
  }
  for_each_bit(merged_nb, [&](int x) { merged = merged.with_edge(Edge(v, x)); });
  return delete_vertices(merged, bit(u) | bit(w)).graph;
}

Bits component_of(const Graph& g, int v) {
  Bits seen = bit(v);
  Bits frontier = seen;
  while (frontier != 0) {
    Bits next = 0;
    for_each_bit(frontier, [&](int x) { next |= g.neighbors(x); });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

std::vector<Relabeled> components(const Graph& g) {
  std::vector<Relabeled> out;
  Bits left = g.vertices();
  while (left != 0) {
    const Bits comp = component_of(g, lowest(left));
    out.push_back(induced_subgraph(g, comp));
    left &= ~comp;
  }
  return out;
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle_graph needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cube_graph() {
  std::vector<Edge> edges;
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if ((v ^ (1 << b)) > v) edges.emplace_back(v, v ^ (1 << b));
  return Graph(8, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || !g.is_connected()) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool is_odd_cycle(const Graph& g) { return g.order() % 2 == 1 && is_cycle(g); }

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      bool ok = true;
      for_each_bit(g.neighbors(x), [&](int y) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        } else if (side[y] == side[x]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

Graph permute(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw PreconditionError("permute: permutation size does not match graph order");
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.order(), edges);
}

}  // namespace critlab

#pragma once

#include <array>
#include <compare>
#include <span>
#include <vector>

#include "critlab/bits.hpp"

namespace critlab {

/// Undirected edge with normalized endpoints u < v.
struct Edge {
  int u = 0;
  int v = 1;

  Edge() = default;
  /// Throws PreconditionError on a loop (a == b).
  Edge(int a, int b);

  bool touches(int x) const noexcept { return u == x || v == x; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A subset of the host graph's vertices.
struct VertexSet {
  Bits bits = 0;

  bool contains(int v) const noexcept { return (bits >> v) & 1U; }
  int size() const noexcept { return count(bits); }
  bool empty() const noexcept { return bits == 0; }
  std::vector<int> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

/// Simple undirected graph on at most 32 labeled vertices.
///
/// Adjacency is stored as one bitset per vertex. Values are immutable: every
/// surgery returns a new graph.
class Graph {
 public:
  static constexpr int kMaxOrder = 32;

  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return n_; }
  int size() const noexcept;
  Bits vertices() const noexcept { return low_bits(n_); }

  Bits neighbors(int v) const;
  int degree(int v) const { return count(neighbors(v)); }
  bool has_edge(int u, int v) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  /// Edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const;

  int max_degree() const noexcept;
  int min_degree() const noexcept;
  bool is_connected() const noexcept;

  /// Copies with one edge toggled. Indices are range-checked; presence is not.
  Graph with_edge(Edge e) const;
  Graph without_edge(Edge e) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<Bits, kMaxOrder> adj_{};
};

/// A graph produced by relabeling surgery, with the map back to its parent:
/// to_parent[v] is the parent label of vertex v.
struct Relabeled {
  Graph graph;
  std::vector<int> to_parent;

  /// Inverse map; entries of parent vertices not kept are -1.
  std::vector<int> from_parent(int parent_order) const;
};

Relabeled delete_vertex(const Graph& g, int v);
Relabeled delete_vertices(const Graph& g, Bits removed);
Relabeled induced_subgraph(const Graph& g, Bits kept);

/// Throws PreconditionError if e is absent.
Graph delete_edge(const Graph& g, Edge e);
/// Throws PreconditionError if e is already present.
Graph add_edge(const Graph& g, Edge e);

/// Merges a degree-2 vertex u with its two non-adjacent neighbors v < w into a
/// single vertex adjacent to (N(v) | N(w)) minus {u, v, w}. The merged vertex
/// keeps v's slot and the remaining vertices are relabeled densely.
Graph contract_degree2(const Graph& g, int u);

/// Connected components ordered by smallest vertex; isolated vertices come out
/// as single-vertex components.
std::vector<Relabeled> components(const Graph& g);

Bits component_of(const Graph& g, int v);

// Small named graphs used across tests and tools.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph cube_graph();
Graph petersen_graph();

bool is_cycle(const Graph& g);
bool is_odd_cycle(const Graph& g);
bool is_bipartite(const Graph& g);

/// Vertex permutation: result has an edge (perm[u], perm[v]) for every edge uv.
Graph permute(const Graph& g, std::span<const int> perm);

}  // namespace critlab

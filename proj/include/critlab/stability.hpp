#pragma once

#include <vector>

#include "critlab/graph.hpp"

namespace critlab {

constexpr int kMaxStableSetListingOrder = 16;

/// Critical edges of `host`: removing any one of them raises alpha by one.
struct CriticalEdgeSet {
  Graph host;
  std::vector<Edge> edges;
};

/// A stable set of `host` claimed to be maximum.
struct StableSetCertificate {
  Graph host;
  VertexSet set;
  int claimed_alpha = 0;
};

bool is_stable(const Graph& g, VertexSet s);

/// A maximum stable set, found by branch and bound. Branches on a vertex of
/// maximum degree among the remaining candidates (smallest index on ties),
/// starts from a greedy min-degree solution and prunes with the bound
/// alpha <= n - m / maxdeg on the remaining subgraph.
VertexSet max_stable_set(const Graph& g);

/// Size of a maximum stable set.
int alpha(const Graph& g);

/// Every maximum stable set, in lexicographic order of their sorted member
/// lists. Throws SizeLimitError above 16 vertices.
std::vector<VertexSet> all_max_stable_sets(const Graph& g);

CriticalEdgeSet critical_edges(const Graph& g);

bool is_edge_critical(const Graph& g, Edge e);

/// True iff every edge is critical; edgeless graphs qualify.
bool is_alpha_critical(const Graph& g);

/// Spanning subgraph obtained by repeatedly deleting the lexicographically
/// smallest non-critical edge of the current graph. The result has the same
/// alpha, keeps every critical edge of g, and is alpha-critical.
Graph critical_subgraph(const Graph& g);

/// The graph on V(g - u) whose edges are the critical edges of g - u, with
/// the map back to g's labels. g must be connected and alpha-critical;
/// otherwise a PreconditionError names the failed property.
Relabeled g_minus_c(const Graph& g, int u);

/// Edges of g_minus_c(g, u), expressed in g's labels.
std::vector<Edge> g_minus_c_edges(const Graph& g, int u);

/// The same edge set computed the other way: critical edges e of g for which
/// some maximum stable set of g - e avoids u. Enumerates maximum stable sets,
/// so it shares no code path with g_minus_c_edges beyond alpha itself.
std::vector<Edge> g_minus_c_edges_by_stable_sets(const Graph& g, int u);

/// Deletes the smallest-index vertex whose removal keeps alpha until none is
/// left; the survivors form a maximum stable set (reported in g's labels).
StableSetCertificate peel_max_stable_set(const Graph& g);

/// Stability and size checks only; maximality is checked against alpha().
bool verify_stable_set(const StableSetCertificate& cert);

}  // namespace critlab

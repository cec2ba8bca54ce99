#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "critlab/graph.hpp"

namespace critlab {

constexpr int kMaxCanonicalOrder = 9;
constexpr int kMaxEnumerateOrder = 7;

/// Lexicographically smallest upper-triangle adjacency bitstring over all
/// vertex permutations, read in graph6 column order ((0,1), (0,2), (1,2),
/// (0,3), ...) with the first bit most significant. Exact; the permutation
/// search only prunes prefixes that already exceed the best one found.
std::uint64_t canonical_key(const Graph& g);

/// The relabeling of g that realizes canonical_key.
Graph canonical_graph(const Graph& g);

/// graph6 text of canonical_graph(g); equal exactly for isomorphic graphs.
std::string canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// One canonical representative per isomorphism class of connected graphs on
/// n vertices, sorted by canonical form. Throws SizeLimitError outside 1..7.
std::vector<Graph> enumerate_connected(int n);

/// Given every connected graph on k vertices (up to isomorphism, duplicates
/// allowed), returns every connected graph on k + 1 vertices that passes
/// `keep`, canonical and sorted. Each connected graph has a non-cut vertex,
/// so adding one vertex with a nonempty neighborhood reaches all of them.
std::vector<Graph> extend_connected(std::span<const Graph> level,
                                    const std::function<bool(const Graph&)>& keep = {});

}  // namespace critlab

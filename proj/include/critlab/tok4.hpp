#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "critlab/graph.hpp"

namespace critlab {

/// Branch pairs in the fixed order ab, ac, ad, bc, bd, cd, as indices into
/// Tok4Certificate::branch.
inline constexpr std::array<std::pair<int, int>, 6> kBranchPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// A totally odd K4-subdivision: four branch vertices and, for each branch
/// pair (in kBranchPairs order), the vertex sequence of its odd-length path.
struct Tok4Certificate {
  std::array<int, 4> branch{};
  std::array<std::vector<int>, 6> paths;

  /// Number of edges used by the subdivision.
  int edge_count() const;
  /// Every vertex used by the subdivision.
  Bits vertex_mask() const;

  friend bool operator==(const Tok4Certificate&, const Tok4Certificate&) = default;
};

/// A certificate refers to vertices that do not exist in the host graph.
class MalformedCertificate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks every certificate invariant against g: endpoints, adjacency along
/// each path, odd lengths, no repeats within a path, interiors pairwise
/// disjoint and disjoint from the branch set. Out-of-range vertices throw
/// MalformedCertificate instead of returning false.
bool verify_tok4(const Graph& g, const Tok4Certificate& cert);

/// Exhaustive search. Branch quadruples are the 4-subsets of vertices with
/// degree >= 3 in lexicographic order; for each, the six pairs are routed in
/// order by depth-first search over odd paths avoiding every vertex already
/// used. An empty result proves that g has no totally odd K4-subdivision.
std::optional<Tok4Certificate> find_tok4(const Graph& g);

bool contains_tok4(const Graph& g);

/// True iff g itself (all of its vertices and edges) is a totally odd
/// K4-subdivision.
bool is_tok4_graph(const Graph& g);

/// Rewrites every vertex through `map` (old label -> new label).
Tok4Certificate relabel(const Tok4Certificate& cert, std::span<const int> map);

}  // namespace critlab

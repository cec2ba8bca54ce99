#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "critlab/graph.hpp"
#include "critlab/stability.hpp"
#include "critlab/tok4.hpp"

namespace critlab {

constexpr int kMaxCoverOrder = 9;
constexpr int kMaxOddCycleOrder = 12;

/// A family of vertices, edges and odd cycles whose union covers V(host).
/// Costs are stored doubled: vertex 2, edge 2, odd cycle C |C| - 1.
struct CoverFamily {
  Graph host;
  std::vector<int> vertices;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> odd_cycles;
  int doubled_cost = 0;
};

/// Doubled cost of the elements of f, without checking them.
int family_doubled_cost(const CoverFamily& f);

/// Names the first cover invariant that does not hold.
class CoverError : public std::runtime_error {
 public:
  CoverError(std::string invariant, const std::string& what)
      : std::runtime_error(what), invariant_(std::move(invariant)) {}
  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

/// Checks f against g (elements exist, cycles are odd simple cycles of g,
/// every vertex covered, stored cost matches) and returns the doubled cost.
int verify_cover(const Graph& g, const CoverFamily& f);

/// Every odd cycle of g once, starting at its smallest vertex and continuing
/// to the smaller of that vertex's two cycle neighbors; sorted.
std::vector<std::vector<int>> enumerate_odd_cycles(const Graph& g);

/// Exact minimum-cost cover by dynamic programming over uncovered sets,
/// always covering the smallest uncovered vertex next. Returns the doubled
/// cost and one optimal family.
std::pair<int, CoverFamily> rho_tilde(const Graph& g);

/// cover_from_theorem was called on a graph that has a totally odd
/// K4-subdivision.
class Tok4Present : public std::invalid_argument {
 public:
  explicit Tok4Present(Tok4Certificate cert)
      : std::invalid_argument("graph contains a totally odd K4-subdivision"),
        certificate(std::move(cert)) {}
  Tok4Certificate certificate;
};

/// A component of a critical subgraph was not a vertex, an edge or an odd
/// cycle. For a graph with no totally odd K4-subdivision this refutes the
/// structure theorem the cover construction relies on.
class TheoremViolation : public std::logic_error {
 public:
  explicit TheoremViolation(Relabeled comp)
      : std::logic_error("critical subgraph component is not K1, K2 or an odd cycle"),
        component(std::move(comp)) {}
  Relabeled component;
};

/// Cover read off the components of critical_subgraph(g). Its cost equals
/// alpha(g) whenever g has no totally odd K4-subdivision.
CoverFamily cover_from_theorem(const Graph& g);

/// Stable set and cover of equal value; each certifies the other optimal.
std::pair<StableSetCertificate, CoverFamily> minmax_certificate(const Graph& g);

}  // namespace critlab

#include "critlab/cover.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "critlab/errors.hpp"

namespace critlab {

int family_doubled_cost(const CoverFamily& f) {
  int cost = 2 * static_cast<int>(f.vertices.size() + f.edges.size());
  for (const auto& c : f.odd_cycles) cost += static_cast<int>(c.size()) - 1;
  return cost;
}

int verify_cover(const Graph& g, const CoverFamily& f) {
  auto in_range = [&](int x) { return x >= 0 && x < g.order(); };
  Bits covered = 0;
  for (int v : f.vertices) {
    if (!in_range(v)) throw CoverError("vertex-range", "cover vertex " + std::to_string(v) + " out of range");
    covered |= bit(v);
  }
  for (const Edge& e : f.edges) {
    if (!in_range(e.u) || !in_range(e.v) || !g.has_edge(e)) {
      throw CoverError("edge-present", "cover edge " + std::to_string(e.u) + "-" +
                                           std::to_string(e.v) + " is not an edge");
    }
    covered |= bit(e.u) | bit(e.v);
  }
  for (const auto& cycle : f.odd_cycles) {
    if (cycle.size() < 3 || cycle.size() % 2 == 0) {
      throw CoverError("cycle-odd", "cover cycle of length " + std::to_string(cycle.size()) +
                                        " is not an odd cycle");
    }
    for (int x : cycle) {
      if (!in_range(x)) throw CoverError("vertex-range", "cycle vertex " + std::to_string(x) + " out of range");
    }
    if (std::set<int>(cycle.begin(), cycle.end()).size() != cycle.size()) {
      throw CoverError("cycle-simple", "cover cycle repeats a vertex");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int a = cycle[i];
      const int b = cycle[(i + 1) % cycle.size()];
      if (!g.has_edge(a, b)) {
        throw CoverError("cycle-adjacent", "cover cycle step " + std::to_string(a) + "-" +
                                               std::to_string(b) + " is not an edge");
      }
      covered |= bit(a);
    }
  }
  if (covered != g.vertices()) {
    const int missing = lowest(g.vertices() & ~covered);
    throw CoverError("coverage", "vertex " + std::to_string(missing) + " is not covered");
  }
  const int cost = family_doubled_cost(f);
  if (cost != f.doubled_cost) {
    throw CoverError("cost", "stored doubled cost " + std::to_string(f.doubled_cost) +
                                 " differs from computed " + std::to_string(cost));
  }
  return cost;
}

namespace {

void collect_cycles(const Graph& g, int start, std::vector<int>& path, Bits visited,
                    std::vector<std::vector<int>>& out) {
  const int x = path.back();
  const Bits nb = g.neighbors(x);
  if (path.size() >= 3 && path.size() % 2 == 1 && ((nb >> start) & 1U) && path[1] < path.back()) {
    out.push_back(path);
  }
  for_each_bit(nb & ~visited & ~low_bits(start + 1), [&](int y) {
    path.push_back(y);
    collect_cycles(g, start, path, visited | bit(y), out);
    path.pop_back();
  });
}

}  // namespace

std::vector<std::vector<int>> enumerate_odd_cycles(const Graph& g) {
  if (g.order() > kMaxOddCycleOrder) {
    throw SizeLimitError("odd cycle enumeration is limited to " +
                         std::to_string(kMaxOddCycleOrder) + " vertices");
  }
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> path{s};
    collect_cycles(g, s, path, bit(s), out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<int, CoverFamily> rho_tilde(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCoverOrder) {
    throw SizeLimitError("rho_tilde is limited to " + std::to_string(kMaxCoverOrder) + " vertices");
  }

  struct Element {
    int kind;  // 0 vertex, 1 edge, 2 odd cycle
    int index;
    Bits mask;
    int cost;
  };
  const std::vector<std::vector<int>> cycles = enumerate_odd_cycles(g);
  std::vector<std::vector<Element>> anchored(n);
  for (int v = 0; v < n; ++v) {
    anchored[v].push_back({0, v, bit(v), 2});
    for_each_bit(g.neighbors(v), [&](int w) { anchored[v].push_back({1, w, bit(v) | bit(w), 2}); });
  }
  for (int i = 0; i < static_cast<int>(cycles.size()); ++i) {
    Bits mask = 0;
    for (int x : cycles[i]) mask |= bit(x);
    const int cost = static_cast<int>(cycles[i].size()) - 1;
    for_each_bit(mask, [&](int v) { anchored[v].push_back({2, i, mask, cost}); });
  }

  const std::size_t states = std::size_t{1} << n;
  std::vector<int> best(states, 0);
  std::vector<const Element*> choice(states, nullptr);
  for (std::size_t s = 1; s < states; ++s) {
    const Bits uncovered = static_cast<Bits>(s);
    best[s] = std::numeric_limits<int>::max();
    for (const Element& el : anchored[lowest(uncovered)]) {
      const int c = el.cost + best[uncovered & ~el.mask];
      if (c < best[s]) {
        best[s] = c;
        choice[s] = &el;
      }
    }
  }

  CoverFamily family{g, {}, {}, {}, best[states - 1]};
  Bits left = g.vertices();
  while (left != 0) {
    const Element& el = *choice[left];
    const int anchor = lowest(left);
    if (el.kind == 0) family.vertices.push_back(anchor);
    else if (el.kind == 1) family.edges.emplace_back(anchor, el.index);
    else family.odd_cycles.push_back(cycles[el.index]);
    left &= ~el.mask;
  }
  return {family.doubled_cost, family};
}

namespace {

// Cycle component as a vertex sequence in its own labels: smallest vertex
// first, then its smaller neighbor.
std::vector<int> trace_cycle(const Graph& c) {
  std::vector<int> seq{0};
  int prev = -1;
  int cur = 0;
  for (int step = 1; step < c.order(); ++step) {
    const Bits nb = c.neighbors(cur) & ~(prev >= 0 ? bit(prev) : Bits{0});
    const int next = lowest(nb);
    seq.push_back(next);
    prev = cur;
    cur = next;
  }
  return seq;
}

}  // namespace

CoverFamily cover_from_theorem(const Graph& g) {
  if (auto cert = find_tok4(g)) throw Tok4Present(std::move(*cert));
  const Graph h = critical_subgraph(g);
  CoverFamily family{g, {}, {}, {}, 0};
  for (Relabeled& comp : components(h)) {
    const Graph& c = comp.graph;
    if (c.order() == 1) {
      family.vertices.push_back(comp.to_parent[0]);
    } else if (c.order() == 2 && c.size() == 1) {
      family.edges.emplace_back(comp.to_parent[0], comp.to_parent[1]);
    } else if (is_odd_cycle(c)) {
      std::vector<int> seq = trace_cycle(c);
      for (int& x : seq) x = comp.to_parent[x];
      family.odd_cycles.push_back(std::move(seq));
    } else {
      throw TheoremViolation(std::move(comp));
    }
  }
  family.doubled_cost = family_doubled_cost(family);
  return family;
}

std::pair<StableSetCertificate, CoverFamily> minmax_certificate(const Graph& g) {
  CoverFamily cover = cover_from_theorem(g);
  StableSetCertificate stable = peel_max_stable_set(g);
  if (2 * stable.set.size() != cover.doubled_cost) {
    throw std::logic_error("stable set of size " + std::to_string(stable.set.size()) +
                           " does not match cover of doubled cost " +
                           std::to_string(cover.doubled_cost));
  }
  return {std::move(stable), std::move(cover)};
}

}  // namespace critlab

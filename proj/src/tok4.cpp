#include "critlab/tok4.hpp"

#include <set>
#include <string>

namespace critlab {

int Tok4Certificate::edge_count() const {
  int total = 0;
  for (const auto& path : paths) total += static_cast<int>(path.size()) - 1;
  return total;
}

Bits Tok4Certificate::vertex_mask() const {
  Bits mask = 0;
  for (int b : branch) mask |= bit(b);
  for (const auto& path : paths)
    for (int x : path) mask |= bit(x);
  return mask;
}

bool verify_tok4(const Graph& g, const Tok4Certificate& cert) {
  auto in_range = [&](int x) { return x >= 0 && x < g.order(); };
  for (int b : cert.branch) {
    if (!in_range(b)) throw MalformedCertificate("branch vertex " + std::to_string(b) + " out of range");
  }
  for (const auto& path : cert.paths) {
    for (int x : path) {
      if (!in_range(x)) throw MalformedCertificate("path vertex " + std::to_string(x) + " out of range");
    }
  }

  const std::set<int> branch(cert.branch.begin(), cert.branch.end());
  if (branch.size() != 4) return false;

  std::set<int> interiors;
  for (std::size_t k = 0; k < kBranchPairs.size(); ++k) {
    const std::vector<int>& path = cert.paths[k];
    if (path.size() < 2) return false;
    if (path.front() != cert.branch[kBranchPairs[k].first]) return false;
    if (path.back() != cert.branch[kBranchPairs[k].second]) return false;
    const std::size_t length = path.size() - 1;
    if (length % 2 == 0) return false;
    if (std::set<int>(path.begin(), path.end()).size() != path.size()) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!g.has_edge(path[i], path[i + 1])) return false;
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (branch.contains(path[i])) return false;
      if (!interiors.insert(path[i]).second) return false;
    }
  }
  return true;
}

namespace {

class Tok4Search {
 public:
  explicit Tok4Search(const Graph& g) : g_(g) {}

  std::optional<Tok4Certificate> run() {
    std::vector<int> cand;
    for (int v = 0; v < g_.order(); ++v)
      if (g_.degree(v) >= 3) cand.push_back(v);
    const int k = static_cast<int>(cand.size());
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        for (int c = b + 1; c < k; ++c)
          for (int d = c + 1; d < k; ++d) {
            cert_.branch = {cand[a], cand[b], cand[c], cand[d]};
            for (auto& path : cert_.paths) path.clear();
            const Bits used = bit(cand[a]) | bit(cand[b]) | bit(cand[c]) | bit(cand[d]);
            if (route(0, used)) return cert_;
          }
    return std::nullopt;
  }

 private:
  bool route(std::size_t pair, Bits used) {
    if (pair == kBranchPairs.size()) return true;
    std::vector<int>& path = cert_.paths[pair];
    path.assign(1, cert_.branch[kBranchPairs[pair].first]);
    if (extend(pair, used)) return true;
    path.clear();
    return false;
  }

  // path holds s .. x; `used` marks branch vertices and every interior so far.
  bool extend(std::size_t pair, Bits used) {
    std::vector<int>& path = cert_.paths[pair];
    const int target = cert_.branch[kBranchPairs[pair].second];
    const Bits nb = g_.neighbors(path.back());
    // Closing the path at target adds edge number path.size().
    if ((nb >> target) & 1U && path.size() % 2 == 1) {
      path.push_back(target);
      if (route(pair + 1, used)) return true;
      path.pop_back();
    }
    Bits next = nb & ~used;
    while (next != 0) {
      const int y = lowest(next);
      next &= next - 1;
      path.push_back(y);
      if (extend(pair, used | bit(y))) return true;
      path.pop_back();
    }
    return false;
  }

  const Graph& g_;
  Tok4Certificate cert_;
};

}  // namespace

std::optional<Tok4Certificate> find_tok4(const Graph& g) { return Tok4Search(g).run(); }

bool contains_tok4(const Graph& g) { return find_tok4(g).has_value(); }

bool is_tok4_graph(const Graph& g) {
  const auto cert = find_tok4(g);
  return cert && cert->edge_count() == g.size() && cert->vertex_mask() == g.vertices();
}

Tok4Certificate relabel(const Tok4Certificate& cert, std::span<const int> map) {
  Tok4Certificate out;
  for (int i = 0; i < 4; ++i) out.branch[i] = map[cert.branch[i]];
  for (std::size_t k = 0; k < cert.paths.size(); ++k)
    for (int x : cert.paths[k]) out.paths[k].push_back(map[x]);
  return out;
}

}  // namespace critlab

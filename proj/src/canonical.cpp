#include "critlab/canonical.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>

#include "critlab/errors.hpp"
#include "critlab/graph6.hpp"

namespace critlab {

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), nbits_(n_ * (n_ - 1) / 2) {
    if (n_ > kMaxCanonicalOrder) {
      throw SizeLimitError("canonical form is limited to " + std::to_string(kMaxCanonicalOrder) +
                           " vertices, got " + std::to_string(n_));
    }
  }

  void run() {
    if (n_ == 0) {
      best_ = 0;
      return;
    }
    search(0, 0, 0);
  }

  std::uint64_t key() const { return best_; }

  /// position -> vertex
  std::span<const int> order() const { return {best_perm_.data(), static_cast<std::size_t>(n_)}; }

 private:
  void search(int position, Bits used, std::uint64_t prefix) {
    if (position == n_) {
      if (prefix < best_) {
        best_ = prefix;
        best_perm_ = perm_;
      }
      return;
    }
    const int len = (position + 1) * position / 2;
    for (int x = 0; x < n_; ++x) {
      if ((used >> x) & 1U) continue;
      std::uint64_t p = prefix;
      for (int i = 0; i < position; ++i) p = (p << 1) | (g_.has_edge(perm_[i], x) ? 1U : 0U);
      if (len > 0 && p > (best_ >> (nbits_ - len))) continue;
      perm_[position] = x;
      search(position + 1, used | bit(x), p);
    }
  }

  const Graph& g_;
  int n_;
  int nbits_;
  std::array<int, kMaxCanonicalOrder> perm_{};
  std::array<int, kMaxCanonicalOrder> best_perm_{};
  std::uint64_t best_ = std::numeric_limits<std::uint64_t>::max();
};

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
  CanonicalSearch search(g);
  search.run();
  return search.key();
}

Graph canonical_graph(const Graph& g) {
  CanonicalSearch search(g);
  search.run();
  std::vector<int> label(g.order());
  const auto order = search.order();
  for (int i = 0; i < g.order(); ++i) label[order[i]] = i;
  return permute(g, label);
}

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

std::vector<Graph> extend_connected(std::span<const Graph> level,
                                    const std::function<bool(const Graph&)>& keep) {
  std::map<std::uint64_t, Graph> found;
  for (const Graph& g : level) {
    const int k = g.order();
    if (k + 1 > kMaxCanonicalOrder) {
      throw SizeLimitError("extend_connected: cannot canonicalize order " + std::to_string(k + 1));
    }
    const std::vector<Edge> base = g.edges();
    for (Bits nb = 1; nb < bit(k); ++nb) {
      std::vector<Edge> edges = base;
      for_each_bit(nb, [&](int v) { edges.emplace_back(v, k); });
      Graph h(k + 1, edges);
      if (keep && !keep(h)) continue;
      const std::uint64_t key = canonical_key(h);
      if (!found.contains(key)) found.emplace(key, canonical_graph(h));
    }
  }
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [key, h] : found) out.push_back(std::move(h));
  return out;
}

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > kMaxEnumerateOrder) {
    throw SizeLimitError("built-in enumeration covers 1.." + std::to_string(kMaxEnumerateOrder) +
                         " vertices; supply larger corpora as graph6 files");
  }
  std::vector<Graph> level{Graph(1)};
  for (int k = 1; k < n; ++k) level = extend_connected(level);
  return level;
}

}  // namespace critlab

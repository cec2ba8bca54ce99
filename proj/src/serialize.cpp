#include "critlab/serialize.hpp"

namespace critlab {

namespace {

constexpr std::array<const char*, 6> kPairNames{"ab", "ac", "ad", "bc", "bd", "cd"};

}  // namespace

Json to_json(const Tok4Certificate& cert) {
  Json paths = Json::object();
  for (std::size_t k = 0; k < kPairNames.size(); ++k) paths[kPairNames[k]] = cert.paths[k];
  return Json{{"branch", cert.branch}, {"paths", std::move(paths)}};
}

Tok4Certificate tok4_from_json(const Json& j) {
  Tok4Certificate cert;
  cert.branch = j.at("branch").get<std::array<int, 4>>();
  for (std::size_t k = 0; k < kPairNames.size(); ++k) {
    cert.paths[k] = j.at("paths").at(kPairNames[k]).get<std::vector<int>>();
  }
  return cert;
}

Json to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json to_json(VertexSet s) { return Json(s.members()); }

Json to_json(const CoverFamily& cover) {
  return Json{{"vertices", cover.vertices},
              {"edges", to_json(cover.edges)},
              {"odd_cycles", cover.odd_cycles},
              {"cost_times_2", cover.doubled_cost}};
}

CoverFamily cover_from_json(const Graph& host, const Json& j) {
  CoverFamily cover{host, {}, {}, {}, 0};
  cover.vertices = j.at("vertices").get<std::vector<int>>();
  for (const Json& e : j.at("edges")) cover.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  cover.odd_cycles = j.at("odd_cycles").get<std::vector<std::vector<int>>>();
  cover.doubled_cost = j.at("cost_times_2").get<int>();
  return cover;
}

}  // namespace critlab

#pragma once

#include "json.hpp"

#include "critlab/cover.hpp"
#include "critlab/graph.hpp"
#include "critlab/stability.hpp"
#include "critlab/tok4.hpp"

namespace critlab {

using Json = nlohmann::ordered_json;

/// {"branch":[a,b,c,d], "paths":{"ab":[...], "ac":[...], ...}}
Json to_json(const Tok4Certificate& cert);
/// Throws nlohmann::json::exception on schema mismatch.
Tok4Certificate tok4_from_json(const Json& j);

/// {"vertices":[...], "edges":[[u,v],...], "odd_cycles":[[...],...], "cost_times_2":k}
Json to_json(const CoverFamily& cover);
CoverFamily cover_from_json(const Graph& host, const Json& j);

Json to_json(const std::vector<Edge>& edges);
Json to_json(VertexSet s);

}  // namespace critlab

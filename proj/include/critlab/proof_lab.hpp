#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "critlab/graph.hpp"
#include "critlab/serialize.hpp"
#include "critlab/tok4.hpp"

namespace critlab {

enum class ClaimId {
  theorem1,
  theorem2,
  lemma1,
  claim2,
  claim3,
  eq1_consistency,
  case1,
  case2,
  cube,
  witness,
};

enum class Verdict { pass, fail, inapplicable };

std::string_view claim_name(ClaimId id);
std::optional<ClaimId> parse_claim(std::string_view name);
std::string_view verdict_name(Verdict v);
const std::vector<ClaimId>& all_claims();

/// Outcome of one check on one graph. A failing report always carries a
/// witness explaining the failure.
struct ClaimReport {
  ClaimId claim = ClaimId::theorem1;
  std::string graph6;
  Verdict verdict = Verdict::inapplicable;
  std::optional<Json> witness;
};

Json to_json(const ClaimReport& report);

/// Three mutually adjacent vertices. For the Case II gadget the order assigns
/// roles: x1 = u, x2 = v (the vertex kept out of the lifted subdivision),
/// x3 = w.
struct Triangle {
  int x1 = 0;
  int x2 = 0;
  int x3 = 0;

  bool is_triangle_of(const Graph& g) const;
  std::array<int, 3> vertices() const { return {x1, x2, x3}; }
};

/// Triangles with x1 < x2 < x3, lexicographic order.
std::vector<Triangle> triangles(const Graph& g);

/// K1, K2 or an odd cycle.
bool is_excluded_base_graph(const Graph& g);
/// Connected, alpha-critical, not K1, K2 or an odd cycle.
bool structure_theorem_applies(const Graph& g);
/// As above and additionally not itself a totally odd K4-subdivision.
bool triangle_theorem_applies(const Graph& g);

ClaimReport check_theorem1(const Graph& g);
/// Throws PreconditionError if t is not a triangle of g.
ClaimReport check_theorem2(const Graph& g, const Triangle& t);
/// One report per triangle, or a single inapplicable report.
std::vector<ClaimReport> check_theorem2_all(const Graph& g);

ClaimReport check_lemma_deg2(const Graph& g);
ClaimReport check_claim_delta(const Graph& g, int u);
ClaimReport check_claim_uvw(const Graph& g, int u);
ClaimReport check_eq1_consistency(const Graph& g, int u);

/// G' = (G - u u2) + u v with the checks the rotation argument relies on.
struct Case1Rotation {
  Graph rotated;
  int alpha_before = 0;
  int alpha_after = 0;
  /// Set when a third vertex w was supplied: whether {u, v, w} is a triangle
  /// of the rotated graph.
  std::optional<bool> triangle_formed;

  bool alpha_preserved() const { return alpha_before == alpha_after; }
};

Case1Rotation case1_rotation(const Graph& g, int u, int u2, int v,
                             std::optional<int> w = std::nullopt);

/// Rotation sweep over a connected alpha-critical graph: for every
/// non-adjacent u, v and every other neighbor u2 of u with u u2 outside
/// G -_c v, alpha is preserved and uv, E(G -_c u), E(G -_c v) are all
/// critical in the rotated graph.
ClaimReport check_case1(const Graph& g);

/// G' = (G - T) + u'w' for a triangle T = {u, v, w} of degree-3 vertices
/// whose outside neighbors u', v', w' are pairwise distinct.
struct Case2Gadget {
  Graph host;
  Triangle roles;
  int u_out = 0;
  int v_out = 0;
  int w_out = 0;
  /// G' with its map into host labels.
  Relabeled gadget;
  int alpha_host = 0;
  int alpha_gadget = 0;

  bool alpha_drops_by_one() const { return alpha_gadget == alpha_host - 1; }
};

/// Throws PreconditionError naming the failed requirement.
Case2Gadget case2_gadget(const Graph& g, const Triangle& t);

/// Carries a subdivision of G' back into g - v (g - v's own labels). An edge
/// u'w' used by the certificate becomes the path u' u w w'. Throws
/// PreconditionError if k does not verify in G'.
Tok4Certificate lift_tok4_through_gadget(const Tok4Certificate& k, const Case2Gadget& gadget);

/// Gadget sweep over a connected alpha-critical graph: for every triangle and
/// role assignment meeting the gadget preconditions, alpha drops by one, the
/// forced edges are critical in G', and any subdivision of G' lifts into g - v.
ClaimReport check_case2(const Graph& g);

bool is_cubic(const Graph& g);
bool is_triangle_free(const Graph& g);
bool has_k23_subgraph(const Graph& g);
bool incident_edges_on_common_4cycle(const Graph& g);
/// The five properties the cube is singled out by.
bool cube_filter(const Graph& g);

/// Over the corpus: exactly one graph passes cube_filter, it is the cube,
/// and the cube is not alpha-critical.
ClaimReport cube_uniqueness_check(std::span<const Graph> corpus);

/// An applicable graph and triangle where exactly two of the three vertex
/// deletions contain a totally odd K4-subdivision. Certificates are in the
/// graph's labels and avoid the deleted vertex.
struct StrengtheningWitness {
  Graph graph;
  Triangle triangle;
  std::array<std::optional<Tok4Certificate>, 3> deletions;
};

std::optional<StrengtheningWitness> find_strengthening_witness(std::span<const Graph> corpus);

/// Re-checks a witness from scratch: the two certificates verify and avoid
/// their vertex, and the third deletion has no subdivision at all.
bool verify_strengthening_witness(const StrengtheningWitness& w);

/// Runs one claim over a corpus. Per-vertex claims produce one report per
/// (graph, vertex); cube and witness produce a single corpus-wide report.
/// Reports are sorted by graph6 code; ties keep corpus order.
std::vector<ClaimReport> run_claim(ClaimId id, std::span<const Graph> corpus);

}  // namespace critlab

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "acymatch/graph.hpp"
#include "acymatch/matching.hpp"

namespace acym {

enum class StageRule {
  low_degree_component,
  light_edge,       // degree-sum at most 2*sqrt(delta)
  min_degree_edge,  // no light vertex left
  hub_edge,         // light-neighbor count of the best hub out of band
  local_search,
};

/// Trace names are part of the trace format and stay fixed.
const char* stage_rule_name(StageRule rule);

/// Snapshot of the residual graph plus the light-vertex structure every
/// reduction rule reads. `delta` is the max degree of the isolated-free
/// input, fixed for the whole run; residual degrees only shrink. A vertex is
/// light iff deg(v)^2 <= delta (exact integers throughout).
struct StageContext {
  Graph graph;
  std::vector<int> to_orig;      // residual id -> input id
  int delta = 0;
  std::vector<uint8_t> is_light;
  VertexSet light;
  std::vector<int> light_deg;    // number of light neighbors
  VertexSet near_light;          // light_deg >= 1
  int max_light_deg = 0;
};

/// to_orig defaults to the identity. Requires delta >= max degree of g.
StageContext make_stage_context(Graph g, int delta, std::vector<int> to_orig = {});

/// One improvement step of the stage objective sum of light_deg over matched
/// non-light vertices: match w to a fresh light vertex u and drop the k-1
/// weakest conflicting edges (none for k == 1). gain >= 1 always.
struct Move {
  int w = -1;
  int u = -1;
  int k = 0;
  std::vector<Edge> drop;
  long long gain = 0;
  uint64_t based_on = 0;  // fingerprint of the matching the move was found on
};

/// V_M / N_M / I_M of a matching: matched vertices, their unmatched
/// neighbors, and the vertices left isolated once both sets are deleted.
struct Closure {
  VertexSet matched;  // V_M
  VertexSet fringe;   // N_M
  VertexSet orphans;  // I_M
};

struct InequalityReport {
  bool e1 = false;        // |V_M|+|N_M| <= (sqrt(delta)+delta)|M|
  bool e2 = false;        // |I1 u I2|  <= (delta-1)(sqrt(delta)-1)|M|
  bool e3 = false;        // |I4|       <= (delta-1)^2 |M| / sqrt(delta)
  bool claim4 = false;    // 15|I3| <= 3d|X1| + 12d|X2| + 10*sum light_deg*d3
  bool i3_final = false;  // 6|I3| <= delta^2 |M|
  bool all_true() const { return e1 && e2 && e3 && claim4 && i3_final; }
};

/// Diagnostic split of N_M and I_M around a local-search stage matching,
/// with the per-hub tallies d1 (X1 u X2 neighbors) and d3 (X3 neighbors).
struct StagePartition {
  VertexSet x, y, z, i1, i2, i3, i4, x1, x2, x3;
  std::vector<std::pair<int, int>> d1, d3;  // (vertex, count), matched non-light only
  InequalityReport checks;
};

struct StageOutcome {
  StageRule rule = StageRule::light_edge;
  Matching stage_matching;  // input ids
  VertexSet vm, nm, im;     // input ids
  long long removed_count = 0;
  bool budget_ok = false;   // 6*removed <= |M|*(delta^2 + 12*delta^{3/2})
  std::optional<StagePartition> partition;  // local-search stages only
};

struct SolveReport {
  Matching matching;
  std::vector<StageOutcome> stages;
  long long n0 = 0;  // vertices after dropping isolated ones
  long long m0 = 0;
  int delta = 0;
  bool bound_ok = false;
  long long isolated_dropped = 0;
};

/// Runs the staged reduction to completion: pick a stage matching by rule
/// priority, certify its removal budget, delete V_M u N_M u I_M, repeat.
/// Isolated input vertices are dropped up front and excluded from n0. The
/// result is an acyclic matching with meets_thm1(size, n0, delta) certified,
/// and a corona forest whenever delta >= 3 (max-degree-2 inputs instead get
/// the larger whole-component matchings). Any internal certificate failure
/// throws errc::invariant_violation.
SolveReport solve(const Graph& g);

/// Matching of a connected component with max degree <= 2: the single edge
/// of a K2, floor(p/2) alternate edges of a path walked from its smallest
/// endpoint, floor(p/2) for an odd cycle, p/2 - 1 for an even cycle.
Matching extract_low_degree(const Graph& component);

/// Lexicographically smallest edge with (deg(u)+deg(v))^2 <= 4*delta, if any.
std::optional<Edge> find_light_edge(const StageContext& ctx);

/// With no light vertices: the edge at the minimum-degree vertex (smallest
/// index), toward its smallest neighbor.
Edge find_min_degree_edge(const StageContext& ctx);

/// With the best hub out of band (5*max_light_deg < delta or > 4*delta):
/// the edge from the hub maximizing light_deg (smallest index) to its
/// minimum-degree neighbor (smallest index).
Edge find_hub_edge(const StageContext& ctx);

/// Seeds one hub edge and applies improving moves to a local optimum of the
/// stage objective. The result satisfies: every edge has exactly one light
/// endpoint; every matched light vertex has exactly one neighbor inside V_M;
/// every matched hub v has 5*light_deg(v) >= delta; the matching is acyclic;
/// and no improving move remains.
Matching local_search(const StageContext& ctx);

/// Scans unmatched fringe vertices in ascending order for the first
/// qualifying move; absent at a local optimum.
std::optional<Move> find_improving_move(const StageContext& ctx, const Matching& m);

/// Applies a move found on exactly this matching (errc::stale_move
/// otherwise).
Matching apply_move(const Matching& m, const Move& mv);

Closure closure(const Graph& g, const Matching& m);

/// Partition and inequality report for a local-search stage matching, all
/// comparisons exact. The caller decides what a false claim4 check means;
/// solve treats it as a fatal certificate failure.
StagePartition analyze_stage(const StageContext& ctx, const Matching& m);

/// Baseline heuristic: scan edges lexicographically, keep an edge whenever
/// the result is still an acyclic matching. No guarantee claimed.
Matching greedy_acyclic(const Graph& g);

/// Fingerprint used to tie a Move to the matching it was found on.
uint64_t matching_fingerprint(const Matching& m);

}  // namespace acym

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "acymatch/graph.hpp"

namespace acym {

/// Set of pairwise vertex-disjoint edges (disjointness is the verifiers'
/// business, not the container's). Edges are kept normalized, sorted and
/// duplicate-free.
struct Matching {
  std::vector<Edge> edges;

  static Matching from_edges(std::vector<Edge> raw);
  static Matching from_pairs(const std::vector<std::pair<int, int>>& raw);

  int size() const { return static_cast<int>(edges.size()); }
  bool empty() const { return edges.empty(); }

  /// partner[v] == matched partner, or -1. Fails if a vertex id is >= n.
  std::vector<int> partner_map(int n) const;
  VertexSet matched_vertices() const;

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Verifier verdict with a machine-readable reason and a counterexample
/// witness usable by the harness.
struct VerifyResult {
  bool ok = true;
  std::string reason = "ok";
  VertexSet witness_vertices;
  std::vector<Edge> witness_edges;

  explicit operator bool() const { return ok; }

  static VerifyResult pass() { return {}; }
  static VerifyResult refuse(std::string why, VertexSet vs = {}, std::vector<Edge> es = {}) {
    return {false, std::move(why), std::move(vs), std::move(es)};
  }
};

/// All edges present in g and pairwise vertex-disjoint. Malformed input is a
/// 'false' verdict with a reason, never an exception.
VerifyResult is_matching(const Graph& g, const Matching& m);

/// Matching whose matched-vertex set induces a forest. On a cycle, the
/// witness carries the edges of one offending cycle.
VerifyResult is_acyclic_matching(const Graph& g, const Matching& m);

/// Matching whose matched-vertex set induces a 1-regular graph.
VerifyResult is_induced_matching(const Graph& g, const Matching& m);

/// Matching whose matched-vertex set induces a k-degenerate graph. The
/// witness on failure is the peeling remainder with all degrees > k.
VerifyResult is_k_degenerate_matching(const Graph& g, const Matching& m, int k);

/// Acyclic matching where every induced vertex of degree >= 2 has exactly one
/// degree-1 neighbor and is matched to it, and every matched edge keeps at
/// least one degree-1 endpoint. Single-edge components satisfy both clauses.
VerifyResult is_corona_forest(const Graph& g, const Matching& m);

}  // namespace acym

#pragma once

#include "acymatch/graph.hpp"
#include "acymatch/matching.hpp"

namespace acym {

enum class MatchKind { plain, acyclic, induced, degenerate };

const char* match_kind_name(MatchKind kind);
MatchKind match_kind_from_name(const std::string& name);

struct OracleResult {
  int optimum = 0;
  Matching witness;
  long long nodes_explored = 0;
};

/// Exhaustive maximum over all matchings of the given kind, by include/
/// exclude branching on edges ordered by descending degree sum. All four
/// matching classes are downward closed, so a partial set that fails can be
/// cut immediately; open branches are cut once current size plus
/// floor(free/2) cannot beat the incumbent. Intended for small instances:
/// vertex_cap guards against oversized inputs, k is required for the
/// degenerate kind.
OracleResult exact_max(const Graph& g, MatchKind kind, int k = -1, int vertex_cap = 20);

}  // namespace acym

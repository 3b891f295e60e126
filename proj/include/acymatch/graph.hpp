#pragma once

#include <span>
#include <utility>
#include <vector>

#include "acymatch/error.hpp"

namespace acym {

/// Undirected edge, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes endpoint order; rejects self-loops.
Edge make_edge(int a, int b);

/// Ascending, duplicate-free vertex identifiers.
using VertexSet = std::vector<int>;

class Graph;
struct Relabeled;
Graph build_graph(int n, const std::vector<Edge>& edges);
Relabeled induced_subgraph(const Graph& g, const VertexSet& keep);

/// Immutable simple graph over dense vertex ids 0..n-1, adjacency in CSR form
/// with each neighbor list strictly increasing.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return n_; }
  long long edge_count() const { return static_cast<long long>(nbr_.size()) / 2; }

  std::span<const int> neighbors(int v) const {
    return {nbr_.data() + off_[v], nbr_.data() + off_[v + 1]};
  }
  int degree(int v) const { return off_[v + 1] - off_[v]; }
  bool has_edge(int u, int v) const;

  int max_degree() const;
  int min_degree() const;  // 0 for the empty graph

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(int n, const std::vector<Edge>& edges);
  friend Relabeled induced_subgraph(const Graph& g, const VertexSet& keep);

  int n_ = 0;
  std::vector<int> off_ = {0};
  std::vector<int> nbr_;
};

/// build_graph validates its input: self-loops, duplicates and out-of-range
/// endpoints are rejected naming the offending edge. Input order is
/// irrelevant to the result.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

/// A graph derived from another one, with both directions of the vertex
/// relabeling (old_to_new[v] == -1 for dropped vertices). Relabeling is
/// order-preserving.
struct Relabeled {
  Graph graph;
  std::vector<int> old_to_new;
  std::vector<int> new_to_old;
};

Relabeled induced_subgraph(const Graph& g, const VertexSet& keep);
Relabeled remove_vertices(const Graph& g, const VertexSet& drop);

/// True iff acyclic, decided by edge_count == vertex_count - #components.
bool is_forest(const Graph& g);

/// Smallest k such that min-degree peeling never removes a vertex of degree
/// above k; 0 for edgeless graphs.
int degeneracy(const Graph& g);

/// Connected components as disjoint VertexSets covering V, ordered by their
/// smallest member.
std::vector<VertexSet> components(const Graph& g);

namespace detail {
/// Validates that a VertexSet is ascending, duplicate-free and within range.
void check_vertex_set(const VertexSet& s, int n, const char* what);
}  // namespace detail

}  // namespace acym

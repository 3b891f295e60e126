#include "acymatch/matching.hpp"

#include <algorithm>
#include <string>

namespace acym {

namespace {

std::string vtx(int v) { return std::to_string(v); }

/// Finds one cycle in g restricted to the vertex set `verts` (graph ids),
/// returned as its edge set; empty if none. Iterative DFS with parent edges.
std::vector<Edge> find_cycle(const Graph& g, const VertexSet& verts) {
  std::vector<int> local(g.vertex_count(), -1);
  for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
  const int k = static_cast<int>(verts.size());
  std::vector<int> parent(k, -2);  // -2 unvisited, -1 root
  for (int root = 0; root < k; ++root) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(verts[x])) {
        int y = local[w];
        if (y < 0 || y == parent[x]) continue;
        if (parent[y] == -2) {
          parent[y] = x;
          stack.push_back(y);
        } else {
          // back edge x-y: walk both endpoints up to the root; the cycle is
          // x..lca..y plus the edge itself
          std::vector<char> on_path(k, 0);
          for (int a = x; a != -1; a = parent[a]) on_path[a] = 1;
          int lca = y;
          while (!on_path[lca]) lca = parent[lca];
          std::vector<Edge> cyc = {make_edge(verts[x], verts[y])};
          for (int a = x; a != lca; a = parent[a]) cyc.push_back(make_edge(verts[a], verts[parent[a]]));
          for (int a = y; a != lca; a = parent[a]) cyc.push_back(make_edge(verts[a], verts[parent[a]]));
          std::sort(cyc.begin(), cyc.end());
          return cyc;
        }
      }
    }
  }
  return {};
}

}  // namespace

Matching Matching::from_edges(std::vector<Edge> raw) {
  for (Edge& e : raw) e = make_edge(e.u, e.v);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  return Matching{std::move(raw)};
}

Matching Matching::from_pairs(const std::vector<std::pair<int, int>>& raw) {
  std::vector<Edge> es;
  es.reserve(raw.size());
  for (auto [a, b] : raw) es.push_back(Edge{a, b});
  return from_edges(std::move(es));
}

std::vector<int> Matching::partner_map(int n) const {
  std::vector<int> partner(n, -1);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n)
      fail(errc::vertex_out_of_range, "matching edge (" + vtx(e.u) + "," + vtx(e.v) + ")");
    partner[e.u] = e.v;
    partner[e.v] = e.u;
  }
  return partner;
}

VertexSet Matching::matched_vertices() const {
  VertexSet out;
  out.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VerifyResult is_matching(const Graph& g, const Matching& m) {
  std::vector<int> partner(g.vertex_count(), -1);
  for (const Edge& e : m.edges) {
    if (e.u < 0 || e.u >= g.vertex_count() || e.v < 0 || e.v >= g.vertex_count())
      return VerifyResult::refuse("vertex_out_of_range", {}, {e});
    if (e.u == e.v) return VerifyResult::refuse("self_loop", {e.u}, {e});
    if (!g.has_edge(e.u, e.v)) return VerifyResult::refuse("edge_not_in_graph", {}, {e});
    for (int x : {e.u, e.v}) {
      if (partner[x] != -1)
        return VerifyResult::refuse("shared_vertex", {x}, {make_edge(x, partner[x]), e});
    }
    partner[e.u] = e.v;
    partner[e.v] = e.u;
  }
  return VerifyResult::pass();
}

VerifyResult is_acyclic_matching(const Graph& g, const Matching& m) {
  if (auto base = is_matching(g, m); !base)
    return VerifyResult::refuse("not_a_matching: " + base.reason, base.witness_vertices,
                                base.witness_edges);
  VertexSet vm = m.matched_vertices();
  auto sub = induced_subgraph(g, vm);
  if (is_forest(sub.graph)) return VerifyResult::pass();
  std::vector<Edge> cyc = find_cycle(g, vm);
  return VerifyResult::refuse("induced_cycle", {}, std::move(cyc));
}

VerifyResult is_induced_matching(const Graph& g, const Matching& m) {
  if (auto base = is_matching(g, m); !base)
    return VerifyResult::refuse("not_a_matching: " + base.reason, base.witness_vertices,
                                base.witness_edges);
  VertexSet vm = m.matched_vertices();
  auto sub = induced_subgraph(g, vm);
  for (size_t i = 0; i < vm.size(); ++i) {
    if (sub.graph.degree(static_cast<int>(i)) != 1) {
      std::vector<Edge> touching;
      for (int w : sub.graph.neighbors(static_cast<int>(i)))
        touching.push_back(make_edge(vm[i], vm[w]));
      return VerifyResult::refuse("induced_degree_not_one", {vm[i]}, std::move(touching));
    }
  }
  return VerifyResult::pass();
}

VerifyResult is_k_degenerate_matching(const Graph& g, const Matching& m, int k) {
  if (k < 0) fail(errc::k_out_of_range, "k must be nonnegative");
  if (auto base = is_matching(g, m); !base)
    return VerifyResult::refuse("not_a_matching: " + base.reason, base.witness_vertices,
                                base.witness_edges);
  VertexSet vm = m.matched_vertices();
  auto sub = induced_subgraph(g, vm);
  if (degeneracy(sub.graph) <= k) return VerifyResult::pass();
  // Witness: repeatedly strip degree-<=k vertices; what survives pins the blame.
  const Graph& h = sub.graph;
  std::vector<int> deg(h.vertex_count());
  std::vector<char> gone(h.vertex_count(), 0);
  std::vector<int> queue;
  for (int v = 0; v < h.vertex_count(); ++v) {
    deg[v] = h.degree(v);
    if (deg[v] <= k) queue.push_back(v);
  }
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (gone[v]) continue;
    gone[v] = 1;
    for (int w : h.neighbors(v))
      if (!gone[w] && --deg[w] == k) queue.push_back(w);
  }
  VertexSet core;
  for (int v = 0; v < h.vertex_count(); ++v)
    if (!gone[v]) core.push_back(vm[v]);
  return VerifyResult::refuse("degeneracy_exceeds_k", std::move(core));
}

VerifyResult is_corona_forest(const Graph& g, const Matching& m) {
  if (auto ac = is_acyclic_matching(g, m); !ac)
    return VerifyResult::refuse("not_acyclic: " + ac.reason, ac.witness_vertices,
                                ac.witness_edges);
  VertexSet vm = m.matched_vertices();
  auto sub = induced_subgraph(g, vm);
  const Graph& h = sub.graph;
  std::vector<int> partner = m.partner_map(g.vertex_count());
  for (int x = 0; x < h.vertex_count(); ++x) {
    if (h.degree(x) < 2) continue;
    int pendant = -1, pendants = 0;
    for (int y : h.neighbors(x)) {
      if (h.degree(y) == 1) {
        ++pendants;
        pendant = y;
      }
    }
    if (pendants != 1)
      return VerifyResult::refuse("pendant_count_" + std::to_string(pendants), {vm[x]});
    if (partner[vm[x]] != vm[pendant])
      return VerifyResult::refuse("pendant_not_partner", {vm[x], vm[pendant]});
  }
  for (const Edge& e : m.edges) {
    int du = h.degree(sub.old_to_new[e.u]);
    int dv = h.degree(sub.old_to_new[e.v]);
    if (du != 1 && dv != 1) return VerifyResult::refuse("edge_without_pendant_end", {}, {e});
  }
  return VerifyResult::pass();
}

}  // namespace acym

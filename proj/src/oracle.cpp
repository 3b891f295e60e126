#include "acymatch/oracle.hpp"

#include <algorithm>
#include <string>

namespace acym {

const char* match_kind_name(MatchKind kind) {
  switch (kind) {
    case MatchKind::plain: return "plain";
    case MatchKind::acyclic: return "acyclic";
    case MatchKind::induced: return "induced";
    case MatchKind::degenerate: return "degenerate";
  }
  return "?";
}

MatchKind match_kind_from_name(const std::string& name) {
  if (name == "plain") return MatchKind::plain;
  if (name == "acyclic") return MatchKind::acyclic;
  if (name == "induced") return MatchKind::induced;
  if (name == "degenerate") return MatchKind::degenerate;
  fail(errc::bad_parameter, "unknown matching kind: " + name);
}

namespace {

struct Searcher {
  const Graph& g;
  MatchKind kind;
  int k;
  std::vector<Edge> order;     // branching order
  std::vector<char> used;      // vertex covered by the current matching
  std::vector<int> uf;         // union-find over covered vertices, -1 outside
  std::vector<Edge> current, best_edges;
  int best = 0;
  long long nodes = 0;

  explicit Searcher(const Graph& graph, MatchKind kind_, int k_)
      : g(graph), kind(kind_), k(k_), used(graph.vertex_count(), 0),
        uf(graph.vertex_count(), -1) {
    order = g.edges();
    std::stable_sort(order.begin(), order.end(), [&](const Edge& a, const Edge& b) {
      int da = g.degree(a.u) + g.degree(a.v);
      int db = g.degree(b.u) + g.degree(b.v);
      if (da != db) return da > db;
      return a < b;
    });
  }

  int find(int x) {
    while (uf[x] != x) {
      uf[x] = uf[uf[x]];
      x = uf[x];
    }
    return x;
  }

  // Joins x and y; false on an induced cycle.
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    uf[rx] = ry;
    return true;
  }

  bool include_ok(const Edge& e) {
    switch (kind) {
      case MatchKind::plain:
        return true;
      case MatchKind::induced:
        // the new endpoints must see nothing already covered
        for (int x : {e.u, e.v})
          for (int w : g.neighbors(x))
            if (used[w] && w != e.u && w != e.v) return false;
        return true;
      case MatchKind::acyclic: {
        uf[e.u] = e.u;
        uf[e.v] = e.v;
        if (!unite(e.u, e.v)) return false;
        for (int x : {e.u, e.v}) {
          const int other = x == e.u ? e.v : e.u;  // already united above
          for (int w : g.neighbors(x))
            if (used[w] && w != other && !unite(x, w)) return false;
        }
        return true;
      }
      case MatchKind::degenerate: {
        VertexSet vm;  // current already holds e
        for (const Edge& c : current) {
          vm.push_back(c.u);
          vm.push_back(c.v);
        }
        std::sort(vm.begin(), vm.end());
        return degeneracy(induced_subgraph(g, vm).graph) <= k;
      }
    }
    return false;
  }

  void record_if_best() {
    if (static_cast<int>(current.size()) > best) {
      best = static_cast<int>(current.size());
      best_edges = current;
    }
  }

  void run(size_t idx, int free_vertices) {
    ++nodes;
    record_if_best();
    if (idx == order.size()) return;
    int edges_left = static_cast<int>(order.size() - idx);
    if (static_cast<int>(current.size()) + std::min(free_vertices / 2, edges_left) <= best)
      return;

    const Edge& e = order[idx];
    if (!used[e.u] && !used[e.v]) {
      // include branch; snapshot union-find state for the acyclic check
      std::vector<int> uf_snapshot;
      if (kind == MatchKind::acyclic) uf_snapshot = uf;
      used[e.u] = used[e.v] = 1;
      current.push_back(e);
      bool ok = include_ok(e);
      if (ok) run(idx + 1, free_vertices - 2);
      current.pop_back();
      used[e.u] = used[e.v] = 0;
      if (kind == MatchKind::acyclic) uf = std::move(uf_snapshot);
    }
    run(idx + 1, free_vertices);  // exclude branch
  }
};

}  // namespace

OracleResult exact_max(const Graph& g, MatchKind kind, int k, int vertex_cap) {
  if (g.vertex_count() > vertex_cap)
    fail(errc::too_large, "n = " + std::to_string(g.vertex_count()) + " exceeds cap " +
                              std::to_string(vertex_cap));
  if (kind == MatchKind::degenerate && k < 0)
    fail(errc::missing_k, "degenerate kind needs k");
  Searcher s(g, kind, k);
  s.run(0, g.vertex_count());
  return OracleResult{s.best, Matching::from_edges(std::move(s.best_edges)), s.nodes};
}

}  // namespace acym

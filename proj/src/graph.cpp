#include "acymatch/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace acym {

namespace {

std::string edge_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Edge make_edge(int a, int b) {
  if (a == b) fail(errc::self_loop, "edge " + edge_str(a, b));
  return a < b ? Edge{a, b} : Edge{b, a};
}

bool Graph::has_edge(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = degree(0);
  for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(nbr_.size() / 2);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.push_back(Edge{u, v});
  return out;
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
  if (n < 0) fail(errc::bad_parameter, "vertex count must be nonnegative");
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      fail(errc::vertex_out_of_range, "edge " + edge_str(e.u, e.v) + " with n=" + std::to_string(n));
    norm.push_back(make_edge(e.u, e.v));
  }
  std::sort(norm.begin(), norm.end());
  for (size_t i = 1; i < norm.size(); ++i)
    if (norm[i] == norm[i - 1])
      fail(errc::duplicate_edge, "edge " + edge_str(norm[i].u, norm[i].v));

  Graph g;
  g.n_ = n;
  std::vector<int> deg(n, 0), smaller(n, 0);
  for (const Edge& e : norm) {
    ++deg[e.u];
    ++deg[e.v];
    ++smaller[e.v];  // e.u < e.v sits in front of v's list
  }
  g.off_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.off_[v + 1] = g.off_[v] + deg[v];
  g.nbr_.resize(norm.size() * 2);
  // norm is sorted lexicographically, so both cursors advance in ascending
  // neighbor order and each list ends up strictly increasing.
  std::vector<int> lo(n), hi(n);
  for (int v = 0; v < n; ++v) {
    lo[v] = g.off_[v];
    hi[v] = g.off_[v] + smaller[v];
  }
  for (const Edge& e : norm) {
    g.nbr_[hi[e.u]++] = e.v;
    g.nbr_[lo[e.v]++] = e.u;
  }
  return g;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> raw;
  raw.reserve(edges.size());
  for (auto [a, b] : edges) raw.push_back(Edge{a, b});
  return build_graph(n, raw);
}

namespace detail {

void check_vertex_set(const VertexSet& s, int n, const char* what) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= n)
      fail(errc::vertex_out_of_range, std::string(what) + ": vertex " + std::to_string(s[i]));
    if (i > 0 && s[i] <= s[i - 1])
      fail(errc::bad_parameter, std::string(what) + ": not strictly ascending");
  }
}

}  // namespace detail

Relabeled induced_subgraph(const Graph& g, const VertexSet& keep) {
  detail::check_vertex_set(keep, g.vertex_count(), "induced_subgraph");
  Relabeled out;
  out.old_to_new.assign(g.vertex_count(), -1);
  out.new_to_old = keep;
  for (size_t i = 0; i < keep.size(); ++i) out.old_to_new[keep[i]] = static_cast<int>(i);

  Graph h;
  h.n_ = static_cast<int>(keep.size());
  h.off_.assign(h.n_ + 1, 0);
  for (int i = 0; i < h.n_; ++i) {
    int cnt = 0;
    for (int w : g.neighbors(keep[i]))
      if (out.old_to_new[w] >= 0) ++cnt;
    h.off_[i + 1] = h.off_[i] + cnt;
  }
  h.nbr_.resize(h.off_[h.n_]);
  for (int i = 0; i < h.n_; ++i) {
    int pos = h.off_[i];
    for (int w : g.neighbors(keep[i]))
      if (int nw = out.old_to_new[w]; nw >= 0) h.nbr_[pos++] = nw;
    // order-preserving relabeling keeps each list ascending
  }
  out.graph = std::move(h);
  return out;
}

Relabeled remove_vertices(const Graph& g, const VertexSet& drop) {
  detail::check_vertex_set(drop, g.vertex_count(), "remove_vertices");
  VertexSet keep;
  keep.reserve(g.vertex_count() - drop.size());
  size_t j = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (j < drop.size() && drop[j] == v) {
      ++j;
      continue;
    }
    keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

bool is_forest(const Graph& g) {
  return g.edge_count() == g.vertex_count() - static_cast<long long>(components(g).size());
}

int degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  // Min-degree peeling with bucketed vertices (Batagelj-Zaversnik).
  std::vector<int> deg(n), pos(n), order(n), start(g.max_degree() + 2, 0);
  for (int v = 0; v < n; ++v) ++start[g.degree(v) + 1];
  for (size_t d = 1; d < start.size(); ++d) start[d] += start[d - 1];
  std::vector<int> cursor(start.begin(), start.end() - 1);
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    pos[v] = cursor[deg[v]]++;
    order[pos[v]] = v;
  }
  std::vector<int> bin(start.begin(), start.end() - 1);

  int best = 0;
  std::vector<char> gone(n, 0);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    best = std::max(best, deg[v]);
    gone[v] = 1;
    for (int w : g.neighbors(v)) {
      if (gone[w] || deg[w] <= deg[v]) continue;
      // swap w to the front of its bucket, then move it one bucket down
      int dw = deg[w], pw = pos[w], pfront = bin[dw];
      int front = order[pfront];
      if (front != w) {
        std::swap(order[pw], order[pfront]);
        pos[w] = pfront;
        pos[front] = pw;
      }
      ++bin[dw];
      --deg[w];
    }
  }
  return best;
}

std::vector<VertexSet> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexSet> out;
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace acym

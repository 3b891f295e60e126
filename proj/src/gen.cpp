#include "acymatch/gen.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace acym {

Graph gen_joos(int delta, int copies) {
  if (delta < 2) fail(errc::bad_parameter, "joos family needs delta >= 2");
  if (copies < 1) fail(errc::bad_parameter, "copies must be >= 1");
  const int q = (delta + 1) / 2 + 1;  // clique order
  const int p = delta / 2;            // leaves per clique vertex
  const int per = q * (p + 1);
  std::vector<Edge> edges;
  for (int c = 0; c < copies; ++c) {
    const int base = c * per;
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j) edges.push_back(Edge{base + i, base + j});
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < p; ++j) edges.push_back(Edge{base + i, base + q + i * p + j});
  }
  return build_graph(copies * per, edges);
}

Graph gen_random_capped(int n, int delta, long long m_target, uint64_t seed) {
  if (n < 0) fail(errc::bad_parameter, "n must be nonnegative");
  if (n == 0) return build_graph(0, std::vector<Edge>{});
  if (delta < 1) fail(errc::infeasible, "delta = 0 leaves every vertex isolated");
  if (n == 1) fail(errc::infeasible, "a single vertex cannot avoid being isolated");
  if (n % 2 == 1 && delta < 2)
    fail(errc::infeasible, "odd n with delta = 1 forces an isolated vertex");
  if (m_target > static_cast<long long>(n) * delta / 2)
    fail(errc::bad_parameter, "m_target exceeds n*delta/2");

  Rng rng(seed);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);

  std::vector<int> deg(n, 0);
  std::unordered_set<uint64_t> present;
  std::vector<Edge> edges;
  auto key = [n](int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<uint64_t>(u) * static_cast<uint64_t>(n) + static_cast<uint64_t>(v);
  };
  auto add = [&](int u, int v) {
    edges.push_back(make_edge(u, v));
    present.insert(key(u, v));
    ++deg[u];
    ++deg[v];
  };

  // Scaffold: paired-up shuffle covers every vertex; an odd leftover hangs
  // off the first pair.
  for (int i = 0; i + 1 < n; i += 2) add(perm[i], perm[i + 1]);
  if (n % 2 == 1) add(perm[n - 1], perm[0]);

  int fail_streak = 0;
  constexpr int kScanAfter = 1000;
  while (static_cast<long long>(edges.size()) < m_target) {
    int u = static_cast<int>(rng.below(n));
    int v = static_cast<int>(rng.below(n));
    bool ok = u != v && deg[u] < delta && deg[v] < delta && !present.count(key(u, v));
    if (ok) {
      add(u, v);
      fail_streak = 0;
      continue;
    }
    if (++fail_streak < kScanAfter) continue;
    // Random draws stopped landing; fall back to the first addable pair.
    fail_streak = 0;
    bool found = false;
    for (int a = 0; a < n && !found; ++a) {
      if (deg[a] >= delta) continue;
      for (int b = a + 1; b < n; ++b) {
        if (deg[b] < delta && !present.count(key(a, b))) {
          add(a, b);
          found = true;
          break;
        }
      }
    }
    if (!found) break;  // saturated under the degree cap
  }
  return build_graph(n, edges);
}

Graph gen_path(int n) {
  if (n < 1) fail(errc::bad_parameter, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
  return build_graph(n, edges);
}

Graph gen_cycle(int n) {
  if (n < 3) fail(errc::bad_parameter, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
  edges.push_back(Edge{0, n - 1});
  return build_graph(n, edges);
}

Graph gen_complete(int n) {
  if (n < 1) fail(errc::bad_parameter, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back(Edge{i, j});
  return build_graph(n, edges);
}

Graph gen_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) fail(errc::bad_parameter, "both parts must be nonempty");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back(Edge{i, a + j});
  return build_graph(a + b, edges);
}

Graph gen_random_tree(int n, uint64_t seed) {
  if (n < 1) fail(errc::bad_parameter, "tree needs n >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back(make_edge(static_cast<int>(rng.below(i)), i));
  return build_graph(n, edges);
}

}  // namespace acym

#pragma once

#include <cstdint>
#include <random>

#include "acymatch/graph.hpp"

namespace acym {

/// Generator identity embedded in instance headers. Draws come from
/// std::mt19937_64 seeded directly with the user seed; bounded values use
/// plain modulo reduction, so byte-identical output only depends on the seed.
inline constexpr const char* kPrngId = "mt19937_64-mod-v1";

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t next() { return eng_(); }
  uint64_t below(uint64_t bound) { return bound == 0 ? 0 : eng_() % bound; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

/// Disjoint copies of the extremal instance: a clique on ceil(delta/2)+1
/// vertices, each clique vertex carrying floor(delta/2) pendant leaves.
/// Clique vertices come first per copy, then the leaves grouped by owner.
Graph gen_joos(int delta, int copies);

/// Random graph with max degree <= delta and no isolated vertex: a shuffled
/// (near-)perfect matching scaffold first, then random edges under the degree
/// cap until m_target edges or saturation. m_target below the scaffold size
/// yields just the scaffold.
Graph gen_random_capped(int n, int delta, long long m_target, uint64_t seed);

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_complete(int n);
Graph gen_complete_bipartite(int a, int b);

/// Uniform attachment tree: vertex i >= 1 joins a random earlier vertex.
Graph gen_random_tree(int n, uint64_t seed);

}  // namespace acym

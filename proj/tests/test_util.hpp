#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "catindex/tree.hpp"

namespace catindex::test {

// Rebuilds a tree under a vertex relabeling given by perm[v] = new index.
inline Tree relabel(const Tree& t, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  t.for_each_edge([&](EdgeView e) { edges.emplace_back(perm[e.u], perm[e.v]); });
  return Tree::from_edge_list(t.vertex_count(), edges);
}

inline std::vector<int> random_permutation(int n, SplitMix64& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i) + 1))]);
  return perm;
}

// Deterministic corpus of random trees shared by the property tests.
inline std::vector<Tree> random_corpus(int count, int n_max, std::uint64_t seed) {
  SplitMix64 master(seed);
  std::vector<Tree> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int n = 3 + static_cast<int>(master.bounded(static_cast<std::uint64_t>(n_max - 2)));
    out.push_back(random_tree(n, master.next()));
  }
  return out;
}

}  // namespace catindex::test

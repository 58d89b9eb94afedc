#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "catindex/errors.hpp"

namespace catindex {

// Undirected edge with u < v; edge iteration yields each edge exactly once.
struct EdgeView {
  int u;
  int v;
};

// Immutable tree on 0-based dense vertex indices. Construction validates
// tree-ness eagerly (index range, self-loops, duplicates, edge count,
// connectivity); invalid input is rejected, never repaired. Immutable after
// construction and safe to share across threads.
//
// Storage is CSR: neighbors of v are adj_[offsets_[v] .. offsets_[v+1]),
// sorted ascending. degree(v) is the range length.
class Tree {
 public:
  static Tree from_edge_list(std::int64_t n, std::span<const std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return n_ - 1; }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }

  std::span<const int> neighbors(int v) const {
    check_vertex(v);
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  bool adjacent(int u, int v) const;

  int max_degree() const;
  int min_degree() const;

  // Degree multiset sorted non-increasing.
  std::vector<int> degree_sequence() const;

  // Visits every edge once as (u, v) with u < v, ascending.
  template <typename F>
  void for_each_edge(F&& fn) const {
    for (int u = 0; u < n_; ++u) {
      for (std::size_t i = offsets_[u]; i < offsets_[u + 1]; ++i) {
        int v = adj_[i];
        if (u < v) fn(EdgeView{u, v});
      }
    }
  }

  std::vector<EdgeView> edges() const;

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.adj_ == b.adj_;
  }

 private:
  Tree() = default;
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      fail(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " outside [0, " +
                                           std::to_string(n_) + ")");
  }

  int n_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<int> adj_;
};

std::vector<int> degree_sequence(const Tree& t);

// Sum of |d(u_i) - d(u_{i+1})| along a walk of pairwise-adjacent vertices.
// A single vertex (or empty list) has imbalance 0.
std::int64_t path_imbalance(const Tree& t, std::span<const int> path);

// SplitMix64: the fixed pseudo-random generator behind random_tree and the
// seeded test corpora. Chosen because its output stream is fully specified
// by the algorithm (no implementation-defined distributions), so identical
// (n, seed) reproduce identical trees on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw from [0, bound) via the multiply-shift reduction.
  std::uint64_t bounded(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

// Uniform random labeled tree: a pseudo-random Pruefer sequence of length
// n-2 drawn with SplitMix64(seed) is decoded into edges. Deterministic for
// fixed (n, seed).
Tree random_tree(std::int64_t n, std::uint64_t seed);

// Edge-list text format: line 1 is the vertex count, then one "u v" pair
// per line (ASCII decimal, space-separated, 0-based). Anything else,
// including trailing garbage, is rejected.
Tree read_edge_list(std::istream& in);
Tree read_edge_list_file(const std::string& path);
void write_edge_list(const Tree& t, std::ostream& out);

}  // namespace catindex

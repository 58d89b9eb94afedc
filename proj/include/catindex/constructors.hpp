#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catindex/tree.hpp"

namespace catindex {

// Default ceiling on constructed tree sizes; the CLI overrides it from
// CATINDEX_MAX_VERTICES.
inline constexpr std::int64_t kDefaultVertexCap = 10'000'000;

// Canonical leaf-count sequence (l_1, ..., l_s) along a caterpillar spine.
// For s >= 2 both ends carry at least one leaf, so deleting all leaves of
// the realized tree returns exactly the spine. A code and its reversal
// realize isomorphic trees; the canonical form is the lexicographically
// smaller of the two.
struct CaterpillarCode {
  std::vector<std::int64_t> leaf_counts;

  bool canonical() const;
  CaterpillarCode canonicalized() const;
  std::int64_t vertex_count() const;  // s + sum(l_i)
  std::string str() const;            // comma-joined

  friend bool operator==(const CaterpillarCode& a, const CaterpillarCode& b) {
    return a.leaf_counts == b.leaf_counts;
  }
  friend bool operator<(const CaterpillarCode& a, const CaterpillarCode& b) {
    return a.leaf_counts < b.leaf_counts;
  }
};

// Branching factors (d_1, ..., d_k) of a complete level tree: the root has
// d_1 children and every vertex at depth i-1 has d_i children.
struct LevelTreeSpec {
  std::vector<std::int64_t> branching;

  std::int64_t vertex_count() const;  // 1 + d_1 + d_1 d_2 + ...
};

// C(n, m): spine path of n vertices, each carrying exactly m pendent
// leaves. Spine vertices occupy indices 0..n-1; the m leaves of spine
// vertex i occupy consecutive indices after all spine vertices.
Tree caterpillar(std::int64_t n, std::int64_t m, std::int64_t vertex_cap = kDefaultVertexCap);

Tree from_code(const CaterpillarCode& code, std::int64_t vertex_cap = kDefaultVertexCap);

Tree level_tree(const LevelTreeSpec& spec, std::int64_t vertex_cap = kDefaultVertexCap);

// One center joined to paths of the given lengths.
Tree spider(const std::vector<std::int64_t>& leg_lengths,
            std::int64_t vertex_cap = kDefaultVertexCap);

Tree path_graph(std::int64_t n, std::int64_t vertex_cap = kDefaultVertexCap);
Tree star_graph(std::int64_t n, std::int64_t vertex_cap = kDefaultVertexCap);

// Tree-spec mini-language used by the CLI and bindings:
//   cat:n=5,m=3   code:1,0,2,0,1   level:3,4,5   spider:2,2,2
//   path:7        star:9           file:PATH
Tree parse_tree_spec(const std::string& spec, std::int64_t vertex_cap = kDefaultVertexCap);

// Vertex cap honoring CATINDEX_MAX_VERTICES when set (parsed once).
std::int64_t vertex_cap_from_env();

}  // namespace catindex

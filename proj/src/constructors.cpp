#include "catindex/constructors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace catindex {

namespace {

void check_cap(std::int64_t total, std::int64_t cap, const std::string& what) {
  if (total > cap)
    fail(ErrorCode::SizeOverflow,
         what + " needs " + std::to_string(total) + " vertices, cap is " + std::to_string(cap));
}

std::vector<std::int64_t> parse_int_list(const std::string& body, const std::string& what) {
  std::vector<std::int64_t> out;
  std::string tok;
  std::istringstream ss(body);
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, what + ": bad integer '" + tok + "'");
    }
    if (pos != tok.size()) fail(ErrorCode::ParseError, what + ": bad integer '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty() || body.empty() || body.back() == ',')
    fail(ErrorCode::ParseError, what + ": empty integer list");
  return out;
}

}  // namespace

bool CaterpillarCode::canonical() const {
  std::vector<std::int64_t> rev(leaf_counts.rbegin(), leaf_counts.rend());
  return leaf_counts <= rev;
}

CaterpillarCode CaterpillarCode::canonicalized() const {
  std::vector<std::int64_t> rev(leaf_counts.rbegin(), leaf_counts.rend());
  return CaterpillarCode{std::min(leaf_counts, rev)};
}

std::int64_t CaterpillarCode::vertex_count() const {
  std::int64_t total = static_cast<std::int64_t>(leaf_counts.size());
  for (std::int64_t l : leaf_counts) total += l;
  return total;
}

std::string CaterpillarCode::str() const {
  std::string out;
  for (std::size_t i = 0; i < leaf_counts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(leaf_counts[i]);
  }
  return out;
}

std::int64_t LevelTreeSpec::vertex_count() const {
  std::int64_t total = 1;
  std::int64_t level = 1;
  for (std::int64_t d : branching) {
    if (d <= 0) fail(ErrorCode::DomainViolation, "level branching must be positive");
    if (level > (INT64_MAX / d)) fail(ErrorCode::SizeOverflow, "level tree size");
    level *= d;
    if (total > INT64_MAX - level) fail(ErrorCode::SizeOverflow, "level tree size");
    total += level;
  }
  return total;
}

Tree caterpillar(std::int64_t n, std::int64_t m, std::int64_t vertex_cap) {
  if (n < 1) fail(ErrorCode::DomainViolation, "caterpillar needs n >= 1, got " + std::to_string(n));
  if (m < 0) fail(ErrorCode::DomainViolation, "caterpillar needs m >= 0, got " + std::to_string(m));
  if (m > 0 && n > INT64_MAX / (m + 1)) fail(ErrorCode::SizeOverflow, "caterpillar size");
  const std::int64_t total = n * (m + 1);
  check_cap(total, vertex_cap, "caterpillar(" + std::to_string(n) + "," + std::to_string(m) + ")");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(total - 1));
  for (std::int64_t i = 0; i + 1 < n; ++i)
    edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  std::int64_t next = n;
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < m; ++j)
      edges.emplace_back(static_cast<int>(i), static_cast<int>(next++));
  return Tree::from_edge_list(total, edges);
}

Tree from_code(const CaterpillarCode& code, std::int64_t vertex_cap) {
  const std::size_t s = code.leaf_counts.size();
  if (s == 0) fail(ErrorCode::InvalidCode, "empty leaf-count sequence");
  for (std::int64_t l : code.leaf_counts)
    if (l < 0) fail(ErrorCode::InvalidCode, "negative leaf count " + std::to_string(l));
  if (s >= 2 && (code.leaf_counts.front() == 0 || code.leaf_counts.back() == 0))
    fail(ErrorCode::InvalidCode, "spine ends must carry at least one leaf: " + code.str());

  const std::int64_t total = code.vertex_count();
  check_cap(total, vertex_cap, "code:" + code.str());

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(total - 1));
  for (std::size_t i = 0; i + 1 < s; ++i)
    edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  std::int64_t next = static_cast<std::int64_t>(s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::int64_t j = 0; j < code.leaf_counts[i]; ++j)
      edges.emplace_back(static_cast<int>(i), static_cast<int>(next++));
  return Tree::from_edge_list(total, edges);
}

Tree level_tree(const LevelTreeSpec& spec, std::int64_t vertex_cap) {
  if (spec.branching.empty()) fail(ErrorCode::DomainViolation, "level tree needs >= 1 level");
  const std::int64_t total = spec.vertex_count();
  check_cap(total, vertex_cap, "level tree");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(total - 1));
  std::vector<std::int64_t> frontier{0};
  std::int64_t next = 1;
  for (std::int64_t d : spec.branching) {
    std::vector<std::int64_t> level;
    level.reserve(frontier.size() * static_cast<std::size_t>(d));
    for (std::int64_t parent : frontier) {
      for (std::int64_t j = 0; j < d; ++j) {
        edges.emplace_back(static_cast<int>(parent), static_cast<int>(next));
        level.push_back(next++);
      }
    }
    frontier = std::move(level);
  }
  return Tree::from_edge_list(total, edges);
}

Tree spider(const std::vector<std::int64_t>& leg_lengths, std::int64_t vertex_cap) {
  if (leg_lengths.empty()) fail(ErrorCode::DomainViolation, "spider needs >= 1 leg");
  std::int64_t total = 1;
  for (std::int64_t len : leg_lengths) {
    if (len < 1) fail(ErrorCode::DomainViolation, "spider leg length must be >= 1");
    if (total > INT64_MAX - len) fail(ErrorCode::SizeOverflow, "spider size");
    total += len;
  }
  check_cap(total, vertex_cap, "spider");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(total - 1));
  std::int64_t next = 1;
  for (std::int64_t len : leg_lengths) {
    std::int64_t prev = 0;
    for (std::int64_t j = 0; j < len; ++j) {
      edges.emplace_back(static_cast<int>(prev), static_cast<int>(next));
      prev = next++;
    }
  }
  return Tree::from_edge_list(total, edges);
}

Tree path_graph(std::int64_t n, std::int64_t vertex_cap) { return caterpillar(n, 0, vertex_cap); }

Tree star_graph(std::int64_t n, std::int64_t vertex_cap) {
  if (n < 1) fail(ErrorCode::DomainViolation, "star needs n >= 1");
  return caterpillar(1, n - 1, vertex_cap);
}

Tree parse_tree_spec(const std::string& spec, std::int64_t vertex_cap) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    fail(ErrorCode::ParseError, "tree spec needs 'kind:args', got '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);

  if (kind == "cat") {
    std::optional<std::int64_t> n, m;
    std::istringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos)
        fail(ErrorCode::ParseError, "cat expects n=..,m=.., got '" + item + "'");
      const std::string key = item.substr(0, eq);
      auto vals = parse_int_list(item.substr(eq + 1), "cat");
      if (vals.size() != 1) fail(ErrorCode::ParseError, "cat parameter '" + key + "'");
      if (key == "n")
        n = vals[0];
      else if (key == "m")
        m = vals[0];
      else
        fail(ErrorCode::ParseError, "cat: unknown parameter '" + key + "'");
    }
    if (!n || !m) fail(ErrorCode::ParseError, "cat requires both n and m");
    return caterpillar(*n, *m, vertex_cap);
  }
  if (kind == "code") return from_code(CaterpillarCode{parse_int_list(body, "code")}, vertex_cap);
  if (kind == "level") return level_tree(LevelTreeSpec{parse_int_list(body, "level")}, vertex_cap);
  if (kind == "spider") return spider(parse_int_list(body, "spider"), vertex_cap);
  if (kind == "path") {
    auto vals = parse_int_list(body, "path");
    if (vals.size() != 1) fail(ErrorCode::ParseError, "path expects one integer");
    return path_graph(vals[0], vertex_cap);
  }
  if (kind == "star") {
    auto vals = parse_int_list(body, "star");
    if (vals.size() != 1) fail(ErrorCode::ParseError, "star expects one integer");
    return star_graph(vals[0], vertex_cap);
  }
  if (kind == "file") return read_edge_list_file(body);
  fail(ErrorCode::ParseError, "unknown tree kind '" + kind + "'");
}

std::int64_t vertex_cap_from_env() {
  static const std::int64_t cap = [] {
    const char* env = std::getenv("CATINDEX_MAX_VERTICES");
    if (!env) return kDefaultVertexCap;
    try {
      std::int64_t v = std::stoll(env);
      return v > 0 ? v : kDefaultVertexCap;
    } catch (const std::exception&) {
      return kDefaultVertexCap;
    }
  }();
  return cap;
}

}  // namespace catindex

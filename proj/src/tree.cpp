#include "catindex/tree.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace catindex {

Tree Tree::from_edge_list(std::int64_t n, std::span<const std::pair<int, int>> edges) {
  if (n <= 0) fail(ErrorCode::EmptyGraph, "vertex count must be positive, got " + std::to_string(n));
  if (n > INT32_MAX) fail(ErrorCode::SizeOverflow, "vertex count " + std::to_string(n));

  const int nv = static_cast<int>(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= nv || v < 0 || v >= nv)
      fail(ErrorCode::IndexOutOfRange,
           "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") with n=" + std::to_string(nv));
    if (u == v) fail(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
  }

  std::vector<std::pair<int, int>> norm(edges.begin(), edges.end());
  for (auto& e : norm)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(norm.begin(), norm.end());
  for (std::size_t i = 1; i < norm.size(); ++i)
    if (norm[i] == norm[i - 1])
      fail(ErrorCode::DuplicateEdge,
           "(" + std::to_string(norm[i].first) + ", " + std::to_string(norm[i].second) + ")");

  // A simple graph on n vertices: more than n-1 edges forces a cycle,
  // fewer cannot be connected.
  if (static_cast<std::int64_t>(norm.size()) > n - 1)
    fail(ErrorCode::CycleDetected,
         std::to_string(norm.size()) + " edges on " + std::to_string(n) + " vertices");
  if (static_cast<std::int64_t>(norm.size()) < n - 1)
    fail(ErrorCode::Disconnected,
         std::to_string(norm.size()) + " edges on " + std::to_string(n) + " vertices");

  Tree t;
  t.n_ = nv;
  t.offsets_.assign(static_cast<std::size_t>(nv) + 1, 0);
  for (const auto& [u, v] : norm) {
    ++t.offsets_[static_cast<std::size_t>(u) + 1];
    ++t.offsets_[static_cast<std::size_t>(v) + 1];
  }
  for (std::size_t i = 1; i < t.offsets_.size(); ++i) t.offsets_[i] += t.offsets_[i - 1];

  t.adj_.assign(2 * norm.size(), 0);
  std::vector<std::size_t> cursor(t.offsets_.begin(), t.offsets_.end() - 1);
  for (const auto& [u, v] : norm) {
    t.adj_[cursor[u]++] = v;
    t.adj_[cursor[v]++] = u;
  }
  for (int v = 0; v < nv; ++v)
    std::sort(t.adj_.begin() + t.offsets_[v], t.adj_.begin() + t.offsets_[v + 1]);

  // n-1 edges and connected <=> tree; an iterative DFS checks reachability.
  std::vector<char> seen(nv, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : t.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++visited;
        stack.push_back(v);
      }
    }
  }
  if (visited != nv)
    fail(ErrorCode::Disconnected,
         "reached " + std::to_string(visited) + " of " + std::to_string(nv) + " vertices");
  return t;
}

bool Tree::adjacent(int u, int v) const {
  auto nb = neighbors(u);
  check_vertex(v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Tree::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

int Tree::min_degree() const {
  int best = n_ > 1 ? n_ : 0;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<int> Tree::degree_sequence() const {
  std::vector<int> degs(n_);
  for (int v = 0; v < n_; ++v) degs[v] = degree(v);
  std::sort(degs.begin(), degs.end(), std::greater<>());
  return degs;
}

std::vector<EdgeView> Tree::edges() const {
  std::vector<EdgeView> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for_each_edge([&](EdgeView e) { out.push_back(e); });
  return out;
}

std::vector<int> degree_sequence(const Tree& t) { return t.degree_sequence(); }

std::int64_t path_imbalance(const Tree& t, std::span<const int> path) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i + 1 < path.size()) {
      if (!t.adjacent(path[i], path[i + 1]))
        fail(ErrorCode::NotAPath, "vertices " + std::to_string(path[i]) + " and " +
                                      std::to_string(path[i + 1]) + " are not adjacent");
      total += std::abs(t.degree(path[i]) - t.degree(path[i + 1]));
    } else {
      t.degree(path[i]);  // validates the final index
    }
  }
  return total;
}

Tree random_tree(std::int64_t n, std::uint64_t seed) {
  if (n <= 0) fail(ErrorCode::EmptyGraph, "vertex count must be positive, got " + std::to_string(n));
  if (n == 1) return Tree::from_edge_list(1, {});
  if (n == 2) {
    const std::pair<int, int> e[] = {{0, 1}};
    return Tree::from_edge_list(2, e);
  }

  const int nv = static_cast<int>(n);
  SplitMix64 rng(seed);
  std::vector<int> pruefer(static_cast<std::size_t>(nv) - 2);
  for (auto& x : pruefer) x = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(nv)));

  // Standard decode: repeatedly join the smallest remaining leaf to the
  // next sequence entry.
  std::vector<int> count(nv, 1);
  for (int x : pruefer) ++count[x];

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(nv) - 1);
  int ptr = 0;
  while (count[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : pruefer) {
    edges.emplace_back(leaf, x);
    if (--count[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      while (count[++ptr] != 1) {
      }
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, nv - 1);
  return Tree::from_edge_list(n, edges);
}

Tree read_edge_list(std::istream& in) {
  auto parse_int = [](const std::string& tok, const std::string& what) -> std::int64_t {
    std::size_t pos = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, what + ": '" + tok + "'");
    }
    if (pos != tok.size()) fail(ErrorCode::ParseError, what + ": '" + tok + "'");
    return value;
  };

  auto tokens_of = [](const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) toks.push_back(tok);
    return toks;
  };

  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::ParseError, "missing vertex-count line");
  auto head = tokens_of(line);
  if (head.size() != 1) fail(ErrorCode::ParseError, "vertex-count line must hold one integer");
  std::int64_t n = parse_int(head[0], "vertex count");

  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    auto toks = tokens_of(line);
    if (toks.empty()) {
      // A blank tail is tolerated only at end of input.
      std::string rest;
      while (std::getline(in, rest))
        if (!tokens_of(rest).empty()) fail(ErrorCode::ParseError, "edge lines after blank line");
      break;
    }
    if (toks.size() != 2)
      fail(ErrorCode::ParseError, "edge line must hold exactly two integers: '" + line + "'");
    std::int64_t u = parse_int(toks[0], "edge endpoint");
    std::int64_t v = parse_int(toks[1], "edge endpoint");
    if (u < INT32_MIN || u > INT32_MAX || v < INT32_MIN || v > INT32_MAX)
      fail(ErrorCode::IndexOutOfRange, "edge endpoint out of range in '" + line + "'");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Tree::from_edge_list(n, edges);
}

Tree read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open file '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(const Tree& t, std::ostream& out) {
  out << t.vertex_count() << "\n";
  t.for_each_edge([&](EdgeView e) { out << e.u << " " << e.v << "\n"; });
}

}  // namespace catindex

#include "catindex/enumerate.hpp"

#include <algorithm>

#include "catindex/closed_forms.hpp"

namespace catindex {

namespace {

bool leq_reversed(const std::vector<std::int64_t>& code) {
  const std::size_t s = code.size();
  for (std::size_t i = 0; i < s; ++i) {
    if (code[i] < code[s - 1 - i]) return true;
    if (code[i] > code[s - 1 - i]) return false;
  }
  return true;
}

// Compositions (l_1..l_s) of `total` with l_1, l_s >= 1 and middle parts
// >= 0, visited in lexicographic order.
void visit_compositions(int total, int s, std::vector<std::int64_t>& code, int pos,
                        const std::function<void(const CaterpillarCode&)>& visit) {
  if (pos == s - 1) {
    if (total >= 1) {
      code[pos] = total;
      if (leq_reversed(code)) visit(CaterpillarCode{code});
    }
    return;
  }
  const int lo = pos == 0 ? 1 : 0;
  // leave at least 1 for the last slot
  for (int v = lo; v <= total - 1; ++v) {
    code[pos] = v;
    visit_compositions(total - v, s, code, pos + 1, visit);
  }
}

}  // namespace

void for_each_caterpillar(int n, const std::function<void(const CaterpillarCode&)>& visit,
                          int cap) {
  if (n < 3) fail(ErrorCode::DomainViolation, "enumeration needs n >= 3, got " + std::to_string(n));
  if (n > cap)
    fail(ErrorCode::SizeLimit,
         "n = " + std::to_string(n) + " above the enumeration cap " + std::to_string(cap));

  // s = 1: the star. Larger spines carry compositions of n - s.
  visit(CaterpillarCode{{n - 1}});
  for (int s = 2; s <= n - 2; ++s) {
    std::vector<std::int64_t> code(static_cast<std::size_t>(s), 0);
    visit_compositions(n - s, s, code, 0, visit);
  }
}

EnumerationResult enumerate_caterpillars(int n, int cap) {
  EnumerationResult out;
  out.n = n;
  for_each_caterpillar(n, [&](const CaterpillarCode& c) { out.codes.push_back(c); }, cap);
  std::sort(out.codes.begin(), out.codes.end());
  out.count = static_cast<std::int64_t>(out.codes.size());
  return out;
}

CountResult count_caterpillars(int n, int cap) {
  if (n < 3) fail(ErrorCode::DomainViolation, "counting needs n >= 3, got " + std::to_string(n));
  CountResult out{evaluate("CNT_THM1", Params{{"n", n}}).rat, std::nullopt};
  if (n <= cap) {
    std::int64_t count = 0;
    for_each_caterpillar(n, [&](const CaterpillarCode&) { ++count; }, cap);
    out.enumerated_count = count;
  }
  return out;
}

ExtremalResult extremal_search(int n, const IndexKind& kind, Objective objective, int cap) {
  std::optional<ExtremalResult> best;
  for_each_caterpillar(
      n,
      [&](const CaterpillarCode& code) {
        const IndexValue value = compute(from_code(code), kind);
        if (!best) {
          best = ExtremalResult{value, code};
          return;
        }
        bool better = false;
        bool tied = false;
        if (value.exact && best->value.exact) {
          better = objective == Objective::Max ? *value.exact > *best->value.exact
                                               : *value.exact < *best->value.exact;
          tied = *value.exact == *best->value.exact;
        } else {
          better = objective == Objective::Max ? value.approx > best->value.approx
                                               : value.approx < best->value.approx;
          tied = value.approx == best->value.approx;
        }
        if (better || (tied && code < best->witness)) best = ExtremalResult{value, code};
      },
      cap);
  if (!best) fail(ErrorCode::DomainViolation, "no caterpillars on " + std::to_string(n) + " vertices");
  return *best;
}

CaterpillarCode encode_caterpillar(const Tree& t) {
  const int n = t.vertex_count();
  if (n == 1) return CaterpillarCode{{0}};
  if (n == 2) return CaterpillarCode{{1}};

  // The derivative: vertices of degree >= 2. For a caterpillar it induces
  // a path (the spine).
  std::vector<int> spine_vertices;
  for (int v = 0; v < n; ++v)
    if (t.degree(v) >= 2) spine_vertices.push_back(v);

  if (spine_vertices.empty()) fail(ErrorCode::NotACaterpillar, "no vertex of degree >= 2");

  auto spine_degree = [&](int v) {
    int d = 0;
    for (int w : t.neighbors(v))
      if (t.degree(w) >= 2) ++d;
    return d;
  };

  if (spine_vertices.size() == 1) {
    const int center = spine_vertices[0];
    return CaterpillarCode{{t.degree(center)}};
  }

  int start = -1;
  for (int v : spine_vertices) {
    const int d = spine_degree(v);
    if (d > 2) fail(ErrorCode::NotACaterpillar, "leaf deletion does not yield a path");
    if (d == 0) fail(ErrorCode::NotACaterpillar, "leaf deletion disconnects the derivative");
    if (d == 1 && start < 0) start = v;
  }
  if (start < 0) fail(ErrorCode::NotACaterpillar, "derivative has no endpoint");

  std::vector<std::int64_t> code;
  int prev = -1;
  int cur = start;
  while (true) {
    std::int64_t leaves = 0;
    int next = -1;
    for (int w : t.neighbors(cur)) {
      if (t.degree(w) == 1)
        ++leaves;
      else if (w != prev)
        next = w;
    }
    code.push_back(leaves);
    if (next < 0) break;
    prev = cur;
    cur = next;
  }
  if (code.size() != spine_vertices.size())
    fail(ErrorCode::NotACaterpillar, "derivative is not a single path");
  return CaterpillarCode{code}.canonicalized();
}

}  // namespace catindex

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "catindex/constructors.hpp"
#include "catindex/indices.hpp"
#include "catindex/rational.hpp"

namespace catindex {

inline constexpr int kDefaultEnumerationCap = 30;

struct EnumerationResult {
  int n = 0;
  std::vector<CaterpillarCode> codes;  // lexicographically sorted canonical codes
  std::int64_t count = 0;
};

// Streams one canonical code per isomorphism class of caterpillars on n
// vertices, in lexicographic order: spine length s runs from 1 (the star)
// through n-2; for s >= 2 the codes are compositions of n-s with both ends
// >= 1; a code is emitted iff it is <= its reversal. Nothing is
// materialized, so extremal search scales to the cap.
void for_each_caterpillar(int n, const std::function<void(const CaterpillarCode&)>& visit,
                          int cap = kDefaultEnumerationCap);

EnumerationResult enumerate_caterpillars(int n, int cap = kDefaultEnumerationCap);

struct CountResult {
  Rational formula_count;                       // exact, integer on the domain
  std::optional<std::int64_t> enumerated_count;  // present when n <= cap
};

CountResult count_caterpillars(int n, int cap = kDefaultEnumerationCap);

enum class Objective { Max, Min };

struct ExtremalResult {
  IndexValue value;
  CaterpillarCode witness;
};

// Scans every canonical code on n vertices for the optimum of the given
// index; ties go to the lexicographically smallest code.
ExtremalResult extremal_search(int n, const IndexKind& kind, Objective objective,
                               int cap = kDefaultEnumerationCap);

// Canonical code of an arbitrary caterpillar: deleting all leaves must
// leave a path (the spine); throws NotACaterpillar otherwise.
CaterpillarCode encode_caterpillar(const Tree& t);

}  // namespace catindex

#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "catindex/indices.hpp"
#include "catindex/rational.hpp"
#include "catindex/tree.hpp"

namespace catindex {

// Named integer parameters in declared order. Declared order is what grid
// iteration, record sorting and JSON emission all use, so reports are
// deterministic.
class Params {
 public:
  Params() = default;
  Params(std::initializer_list<std::pair<std::string, std::int64_t>> items)
      : items_(items) {}

  void set(const std::string& name, std::int64_t value);
  std::int64_t get(const std::string& name) const;  // DomainViolation if absent
  bool has(const std::string& name) const;
  const std::vector<std::pair<std::string, std::int64_t>>& items() const { return items_; }
  std::string str() const;  // "n=3,m=4"

  friend bool operator==(const Params& a, const Params& b) { return a.items_ == b.items_; }
  friend bool operator<(const Params& a, const Params& b) { return a.items_ < b.items_; }

 private:
  std::vector<std::pair<std::string, std::int64_t>> items_;
};

// Value of a closed form: exact rational for the integer-parameter
// polynomials, double for forms with radicals. approx is always usable.
struct ClaimValue {
  bool exact = false;
  Rational rat;
  double approx = 0.0;

  static ClaimValue of(const Rational& r) { return {true, r, r.to_double()}; }
  static ClaimValue of(double d) { return {false, Rational(), d}; }
  std::string str() const;
};

enum class Comparison {
  OracleEquality,      // closed form claimed equal to the graph oracle
  OracleInformational, // compared against the oracle, reported only
  FormulaConsistency,  // two registered formulas compared on a shared domain
  TableFixture,        // embedded table cell recomputed
  Bound,               // oracle claimed <= closed form
};
const char* to_string(Comparison c);

// Audit policy for a record: expected-MATCH claims fail the strict gate on
// any mismatch; known-MISMATCH claims fail it if they ever start matching.
enum class Expect { Match, Mismatch, None };

enum class OracleSource {
  None,             // no realizing tree family; closed form evaluated only
  Family,           // build the family tree, compute index_kind on it
  CaterpillarCount, // exhaustive caterpillar enumeration count
};

struct Claim {
  std::string id;
  std::string statement;   // the formula the claim asserts
  std::string domain_desc;
  std::vector<std::string> param_names;
  std::function<bool(const Params&)> in_domain;
  std::function<ClaimValue(const Params&)> eval;
  Comparison comparison = Comparison::OracleEquality;
  OracleSource oracle = OracleSource::None;
  IndexKind kind = IndexKind::albertson();
  std::function<Tree(const Params&)> family;  // set iff oracle == Family
  std::string family_desc;
  std::function<Expect(const Params&)> expect;
  std::string note;
  std::function<std::vector<Params>()> default_grid;
};

// Two formulas evaluated on a shared parameter domain; MATCH means they
// agree. P_SPE1's coefficient-table route lives here as the right side of
// its pair.
struct ConsistencyPair {
  std::string id;
  std::string left_desc;
  std::string right_desc;
  std::vector<std::string> param_names;
  std::function<bool(const Params&)> in_domain;
  std::function<ClaimValue(const Params&)> left_eval;
  std::function<ClaimValue(const Params&)> right_eval;
  std::function<Expect(const Params&)> expect;
  std::string note;
  std::function<std::vector<Params>()> default_grid;
};

const std::vector<Claim>& claim_registry();
const std::vector<ConsistencyPair>& consistency_pairs();
const Claim& find_claim(const std::string& id);                  // UnknownClaim
const ConsistencyPair* find_pair(const std::string& id);         // nullptr if absent
const ConsistencyPair* pair_for_claim(const std::string& claim_id);

// Evaluates a registered claim at the given parameters.
ClaimValue evaluate(const std::string& id, const Params& params);

}  // namespace catindex

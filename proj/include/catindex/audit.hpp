#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "catindex/closed_forms.hpp"
#include "catindex/enumerate.hpp"
#include "catindex/tree.hpp"

namespace catindex {

enum class Verdict { MATCH, MISMATCH, NOT_APPLICABLE };
const char* to_string(Verdict v);

// Comparison tolerance for real-valued verdicts: relative 1e-9 with an
// absolute floor of 1e-9. Exact (rational/integer) routes compare exactly.
inline constexpr double kRelTolerance = 1e-9;
inline constexpr double kAbsTolerance = 1e-9;

struct RecordNumber {
  bool is_int = false;
  std::int64_t int_value = 0;
  double value = 0.0;

  static RecordNumber of_int(std::int64_t v) { return {true, v, static_cast<double>(v)}; }
  static RecordNumber of_real(double v) { return {false, 0, v}; }
  static RecordNumber of(const ClaimValue& v) {
    return v.exact && v.rat.is_integer() ? of_int(v.rat.to_integer()) : of_real(v.approx);
  }
  static RecordNumber of(const IndexValue& v) {
    return v.exact ? of_int(*v.exact) : of_real(v.approx);
  }
};

// One audit outcome. Serialized fields (in order): claim_id, params,
// closed_form_value, oracle_value, abs_diff, verdict, comparison, note.
// The expectation drives the strict-mode policy and is not serialized.
struct VerdictRecord {
  std::string claim_id;
  Params params;
  RecordNumber closed_form_value;
  std::optional<RecordNumber> oracle_value;
  std::optional<double> abs_diff;
  Verdict verdict = Verdict::NOT_APPLICABLE;
  Comparison comparison = Comparison::OracleEquality;
  std::string note;
  Expect expect = Expect::None;
};

// Inclusive parameter ranges; the Cartesian product in the claim's declared
// parameter order forms the grid.
struct GridSpec {
  std::vector<std::pair<std::string, std::pair<std::int64_t, std::int64_t>>> ranges;

  static GridSpec parse(const std::string& text);  // "n=3..50,m=3..5"
  bool empty() const { return ranges.empty(); }
};

// Runs one claim (or consistency pair) over a grid; no grid means the
// registered default grid. Records come back sorted by (claim_id, params).
std::vector<VerdictRecord> audit_claim(const std::string& id,
                                       const std::optional<GridSpec>& grid = std::nullopt);

// Every registered claim and consistency pair on default grids.
std::vector<VerdictRecord> audit_all();

// ---- inequality suite ----

struct CaterpillarSource {
  int n_max = 12;  // every enumerated caterpillar with 3 <= n <= n_max
};
struct RandomTreeSource {
  int count = 1000;
  int n_max = 64;
  std::uint64_t seed = 1;
};
struct SingleTreeSource {
  std::string spec;  // tree-spec mini-language
};
using TreeSource = std::variant<CaterpillarSource, RandomTreeSource, SingleTreeSource>;

// "cats:12", "random:count=1000,nmax=64,seed=1", or any tree spec.
TreeSource parse_tree_source(const std::string& text);

enum class BoundId {
  B_PR01,        // sqrt(sigma) <= irr <= sqrt(m*sigma)   (two records per tree)
  B_LEM1,        // irr <= (D-d)/sqrt(Dd) * sqrt(m * sum d_u d_v)
  B_PAA,         // sigma_t <= mod-4 case bound
  B_IRRT_TREE,   // irr_T <= (n-2) irr, trees with n >= 3
  B_IRRT_GEN,    // irr_T <= (n^2/4) irr
  B_DORJ_LOWER,  // irr >= 2 floor(D/2)          (informational)
  B_DORJ_UPPER,  // irr <= (6n^2 D + 3D^2 n - 2D^3 - 4D)/48  (informational)
};
const char* to_string(BoundId b);
BoundId parse_bound_id(const std::string& text);
std::vector<BoundId> all_bounds();

std::vector<VerdictRecord> check_bound(BoundId bound, const TreeSource& source);

// ---- table fixtures ----

enum class TableId { TABLE1, TABLE2, TABLE3 };
TableId parse_table_id(const std::string& text);

struct TableCell {
  Params params;
  Rational expected;
};
const std::vector<TableCell>& table_fixture(TableId id);
// TABLE3 stores two fixtures per row; zeta and K*zeta.
const std::vector<TableCell>& table3_zeta_fixture();
const std::vector<TableCell>& table3_kzeta_fixture();

std::vector<VerdictRecord> reproduce_table(TableId id);

// ---- policy ----

// Strict-mode violations: expected-MATCH records that mismatch and
// known-MISMATCH records that match.
std::vector<const VerdictRecord*> policy_violations(const std::vector<VerdictRecord>& records);

void sort_records(std::vector<VerdictRecord>& records);

}  // namespace catindex

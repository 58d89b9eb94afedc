#include <doctest.h>

#include <set>

#include "catindex/audit.hpp"
#include "catindex/report.hpp"

using namespace catindex;
using doctest::Approx;

namespace {

bool all_verdict(const std::vector<VerdictRecord>& records, Verdict v) {
  for (const VerdictRecord& rec : records)
    if (rec.verdict != v) return false;
  return !records.empty();
}

}  // namespace

TEST_CASE("expected-MATCH claims match on their default grids") {
  for (const char* id : {"P_PROJAS", "P_GEN_NM", "P_PRO4", "P_PRO5", "P_POO", "P_SIGM4",
                         "P_SIGMA5", "CNT_THM1"}) {
    const std::vector<VerdictRecord> records = audit_claim(id);
    CHECK(all_verdict(records, Verdict::MATCH));
    CHECK(policy_violations(records).empty());
  }
}

TEST_CASE("T_THM2 mismatches everywhere; smallest counterexample comes first") {
  const std::vector<VerdictRecord> records =
      audit_claim("T_THM2", GridSpec::parse("n=3..50,m=3..5"));
  CHECK(all_verdict(records, Verdict::MISMATCH));
  CHECK(records.front().params == Params{{"n", 3}, {"m", 3}});
  CHECK(records.front().closed_form_value.int_value == 29);
  CHECK(records.front().oracle_value->int_value == 32);
  CHECK(*records.front().abs_diff == Approx(3.0));
  CHECK(policy_violations(records).empty());
}

TEST_CASE("T_THM4 mismatches except the accidental crossing at (4,3)") {
  const std::vector<VerdictRecord> records = audit_claim("T_THM4");
  int matches = 0;
  for (const VerdictRecord& rec : records) {
    if (rec.verdict == Verdict::MATCH) {
      ++matches;
      CHECK(rec.params == Params{{"n", 4}, {"m", 3}});
      CHECK(rec.closed_form_value.int_value == 152);
    }
  }
  CHECK(matches == 1);
  CHECK(policy_violations(records).empty());
}

TEST_CASE("R_RANDPRO1 matches the oracle only at n = 14") {
  const std::vector<VerdictRecord> records =
      audit_claim("R_RANDPRO1", GridSpec::parse("n=3..50"));
  CHECK(records.size() == 48);
  for (const VerdictRecord& rec : records) {
    const bool expect_match = rec.params.get("n") == 14;
    CHECK((rec.verdict == Verdict::MATCH) == expect_match);
  }
  CHECK(policy_violations(records).empty());
}

TEST_CASE("Sombor claims mismatch under the standard definition, with the note") {
  const std::vector<VerdictRecord> records =
      audit_claim("SO_PRO3_M3", GridSpec::parse("n=3..20"));
  CHECK(all_verdict(records, Verdict::MISMATCH));
  for (const VerdictRecord& rec : records)
    CHECK(rec.note.find("definition: external-standard") != std::string::npos);
  CHECK(policy_violations(records).empty());
}

TEST_CASE("consistency pairs") {
  SUBCASE("thm201 A vs B disagree by 9 at the base point") {
    const std::vector<VerdictRecord> records =
        audit_claim("CONS_THM201_AB", GridSpec::parse("n=3"));
    REQUIRE(records.size() == 1);
    CHECK(records[0].verdict == Verdict::MISMATCH);
    CHECK(records[0].closed_form_value.int_value == 147);
    CHECK(records[0].oracle_value->int_value == 156);
    CHECK(*records[0].abs_diff == Approx(9.0));
  }
  SUBCASE("P_SPE1 audits as its own coefficient-table pair") {
    const std::vector<VerdictRecord> records = audit_claim("P_SPE1");
    CHECK(all_verdict(records, Verdict::MATCH));
    CHECK(records.front().claim_id == "CONS_SPE1");
  }
  SUBCASE("the generalization pairs hold") {
    for (const char* id : {"CONS_GEN_PROJAS", "CONS_GEN_PRO4", "CONS_GEN_PRO5"})
      CHECK(all_verdict(audit_claim(id), Verdict::MATCH));
  }
  SUBCASE("thm2 statement vs proof line differ by m-2") {
    const std::vector<VerdictRecord> records =
        audit_claim("CONS_THM2_PROOF", GridSpec::parse("n=3..10,m=3..5"));
    CHECK(all_verdict(records, Verdict::MISMATCH));
    for (const VerdictRecord& rec : records)
      CHECK(*rec.abs_diff == Approx(static_cast<double>(rec.params.get("m") - 2)));
  }
  SUBCASE("thm4 vs poo cross only at n = 4") {
    for (const VerdictRecord& rec : audit_claim("CONS_THM4_POO"))
      CHECK((rec.verdict == Verdict::MATCH) == (rec.params.get("n") == 4));
  }
}

TEST_CASE("claims without a realizing family yield NOT_APPLICABLE records") {
  const std::vector<VerdictRecord> records = audit_claim("L_THREEC_MAX");
  CHECK(!records.empty());
  for (const VerdictRecord& rec : records) {
    CHECK(rec.verdict == Verdict::NOT_APPLICABLE);
    CHECK_FALSE(rec.oracle_value);
  }
  CHECK(policy_violations(records).empty());
}

TEST_CASE("level-tree informational claims are reported but never gate") {
  for (const char* id : {"T_THM201_A", "T_THM201_B", "T_THM202"}) {
    const std::vector<VerdictRecord> records = audit_claim(id);
    CHECK(policy_violations(records).empty());
    for (const VerdictRecord& rec : records) CHECK(rec.verdict == Verdict::MISMATCH);
  }
}

TEST_CASE("hard bounds hold on enumerated caterpillars") {
  for (BoundId b : {BoundId::B_PR01, BoundId::B_LEM1, BoundId::B_PAA, BoundId::B_IRRT_TREE,
                    BoundId::B_IRRT_GEN}) {
    const std::vector<VerdictRecord> records = check_bound(b, CaterpillarSource{12});
    CHECK(all_verdict(records, Verdict::MATCH));
  }
}

TEST_CASE("hard bounds hold on a seeded random corpus") {
  const RandomTreeSource source{1000, 64, 1};
  for (BoundId b : {BoundId::B_PR01, BoundId::B_LEM1, BoundId::B_PAA, BoundId::B_IRRT_TREE,
                    BoundId::B_IRRT_GEN})
    CHECK(all_verdict(check_bound(b, source), Verdict::MATCH));
}

TEST_CASE("B_PAA is tight on P3") {
  const std::vector<VerdictRecord> records = check_bound(BoundId::B_PAA, SingleTreeSource{"path:3"});
  REQUIRE(records.size() == 1);
  CHECK(records[0].verdict == Verdict::MATCH);
  CHECK(records[0].oracle_value->value == Approx(2.0));
  CHECK(records[0].closed_form_value.value == Approx(2.0));
  CHECK(*records[0].abs_diff == Approx(0.0));
}

TEST_CASE("informational bounds never create policy violations") {
  for (BoundId b : {BoundId::B_DORJ_LOWER, BoundId::B_DORJ_UPPER}) {
    const std::vector<VerdictRecord> records = check_bound(b, CaterpillarSource{10});
    CHECK(policy_violations(records).empty());
  }
}

TEST_CASE("table reproduction") {
  const std::vector<VerdictRecord> t1 = reproduce_table(TableId::TABLE1);
  CHECK(t1.size() == 33);
  CHECK(all_verdict(t1, Verdict::MATCH));

  const std::vector<VerdictRecord> t2 = reproduce_table(TableId::TABLE2);
  CHECK(t2.size() == 40);
  CHECK(all_verdict(t2, Verdict::MATCH));

  const std::vector<VerdictRecord> t3 = reproduce_table(TableId::TABLE3);
  CHECK(t3.size() == 16);  // zeta and K*zeta per row
  int zeta_matches = 0, kzeta_matches = 0;
  for (const VerdictRecord& rec : t3) {
    if (rec.claim_id == "TABLE3_ZETA" && rec.verdict == Verdict::MATCH) ++zeta_matches;
    if (rec.claim_id == "TABLE3_KZETA" && rec.verdict == Verdict::MATCH) ++kzeta_matches;
    if (rec.params == Params{{"a", 3}, {"b", 4}, {"c", 5}}) CHECK(rec.verdict == Verdict::MATCH);
  }
  CHECK(zeta_matches == 7);   // the (5,6,7) row prints 648 for 684
  CHECK(kzeta_matches == 4);  // half the K*zeta cells are internally inconsistent
  CHECK(policy_violations(t3).empty());
}

TEST_CASE("audit_all covers the registry and is deterministic") {
  const std::vector<VerdictRecord> first = audit_all();
  const std::vector<VerdictRecord> second = audit_all();
  CHECK(records_to_json(first) == records_to_json(second));
  CHECK(policy_violations(first).empty());

  std::set<std::string> ids;
  for (const VerdictRecord& rec : first) ids.insert(rec.claim_id);
  for (const Claim& claim : claim_registry())
    if (claim.comparison != Comparison::FormulaConsistency)
      CHECK(ids.count(claim.id) == 1);
  for (const ConsistencyPair& pair : consistency_pairs()) CHECK(ids.count(pair.id) == 1);

  SUBCASE("records are sorted by claim id, then declared params") {
    for (std::size_t i = 1; i < first.size(); ++i) {
      const bool ordered = first[i - 1].claim_id < first[i].claim_id ||
                           (first[i - 1].claim_id == first[i].claim_id &&
                            !(first[i].params < first[i - 1].params));
      CHECK(ordered);
    }
  }
}

TEST_CASE("policy violations flag both directions") {
  VerdictRecord good;
  good.claim_id = "X";
  good.verdict = Verdict::MATCH;
  good.expect = Expect::Match;
  VerdictRecord broken_match = good;
  broken_match.verdict = Verdict::MISMATCH;
  VerdictRecord accidental_fix = good;
  accidental_fix.expect = Expect::Mismatch;  // matches although asserted mismatching
  VerdictRecord na = good;
  na.verdict = Verdict::NOT_APPLICABLE;
  na.expect = Expect::Match;

  const std::vector<VerdictRecord> records = {good, broken_match, accidental_fix, na};
  CHECK(policy_violations(records).size() == 2);
}

TEST_CASE("grid parsing") {
  const GridSpec grid = GridSpec::parse("n=3..50,m=4");
  CHECK(grid.ranges.size() == 2);
  CHECK(grid.ranges[0].second == std::make_pair<std::int64_t, std::int64_t>(3, 50));
  CHECK(grid.ranges[1].second == std::make_pair<std::int64_t, std::int64_t>(4, 4));

  CHECK_THROWS_AS((void)GridSpec::parse(""), Error);
  CHECK_THROWS_AS((void)GridSpec::parse("n=5..3"), Error);
  CHECK_THROWS_AS((void)GridSpec::parse("n=a..b"), Error);
  CHECK_THROWS_AS((void)GridSpec::parse("=3..5"), Error);

  SUBCASE("grids outside the claim domain are rejected") {
    CHECK_THROWS_AS((void)audit_claim("P_PROJAS", GridSpec::parse("n=2..5")), Error);
    CHECK_THROWS_AS((void)audit_claim("P_PROJAS", GridSpec::parse("m=3..5")), Error);
  }
}

TEST_CASE("tree source parsing") {
  CHECK(std::holds_alternative<CaterpillarSource>(parse_tree_source("cats:12")));
  CHECK(std::get<CaterpillarSource>(parse_tree_source("cats:12")).n_max == 12);
  const auto random = std::get<RandomTreeSource>(
      parse_tree_source("random:count=50,nmax=32,seed=9"));
  CHECK(random.count == 50);
  CHECK(random.n_max == 32);
  CHECK(random.seed == 9);
  CHECK(std::holds_alternative<SingleTreeSource>(parse_tree_source("cat:n=3,m=3")));
  CHECK_THROWS_AS((void)parse_tree_source("cats:x"), Error);
  CHECK_THROWS_AS((void)parse_tree_source("random:count=0"), Error);
}

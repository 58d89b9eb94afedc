#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "catindex/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = catindex::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute prints integers exactly and reals with 9 decimals") {
  CHECK(run_cli({"compute", "--tree", "cat:n=3,m=3", "--index", "sigma"}).out == "104\n");
  CHECK(run_cli({"compute", "--tree", "path:3", "--index", "harmonic"}).out == "1.333333333\n");
  CHECK(run_cli({"compute", "--tree", "cat:n=3,m=3", "--index", "albertson"}).out == "32\n");

  const CliResult js = run_cli({"compute", "--tree", "path:3", "--index", "sombor",
                                "--format", "json"});
  CHECK(js.code == 0);
  const json parsed = json::parse(js.out);
  CHECK(parsed["value"] == doctest::Approx(4.472135955));
}

TEST_CASE("audit --claim with a grid emits schema-conformant JSON") {
  const CliResult result = run_cli({"audit", "--claim", "T_THM4", "--grid", "n=3..10,m=3..5",
                                    "--format", "json"});
  CHECK(result.code == 0);
  const json parsed = json::parse(result.out);
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == 24);
  int mismatches = 0;
  for (const json& rec : parsed) {
    const std::vector<std::string> keys = {"claim_id", "params", "closed_form_value",
                                           "oracle_value", "abs_diff", "verdict", "comparison",
                                           "note"};
    CHECK(rec.size() == keys.size());
    for (const std::string& key : keys) CHECK(rec.contains(key));
    if (rec["verdict"] == "MISMATCH") ++mismatches;
  }
  // every grid point mismatches except the accidental crossing at (4,3)
  CHECK(mismatches == 23);
}

TEST_CASE("table subcommand") {
  const CliResult csv = run_cli({"table", "--id", "table1", "--format", "csv"});
  CHECK(csv.code == 0);
  int lines = 0, matches = 0;
  std::istringstream ss(csv.out);
  std::string line;
  while (std::getline(ss, line)) {
    ++lines;
    if (line.find(",MATCH,") != std::string::npos) ++matches;
  }
  CHECK(lines == 34);  // header + 33 cells
  CHECK(matches == 33);

  CHECK(run_cli({"table", "--id", "table2", "--strict"}).code == 0);
  CHECK(run_cli({"table", "--id", "nope"}).code == 1);
}

TEST_CASE("enumerate and extremal") {
  CHECK(run_cli({"enumerate", "--n", "7", "--count-only"}).out == "10 10\n");
  CHECK(run_cli({"enumerate", "--n", "4"}).out == "3\n1,1\n");
  CHECK(run_cli({"extremal", "--n", "12", "--index", "albertson", "--objective", "max"}).out ==
        "110 11\n");
  CHECK(run_cli({"extremal", "--n", "5", "--index", "albertson", "--objective", "min"}).out ==
        "2 1,0,1\n");
  CHECK(run_cli({"enumerate", "--n", "40", "--count-only"}).out == "68719738880 -\n");
}

TEST_CASE("claims registry dump") {
  const CliResult result = run_cli({"claims"});
  CHECK(result.code == 0);
  const json parsed = json::parse(result.out);
  CHECK(parsed.size() == 33);
  bool found = false;
  for (const json& claim : parsed)
    if (claim["id"] == "P_PROJAS") {
      found = true;
      CHECK(claim["comparison"] == "oracle-equality");
      CHECK(claim["statement"] == "irr(C(n,3)) = 12n - 4");
    }
  CHECK(found);
}

TEST_CASE("bounds subcommand") {
  const CliResult result = run_cli({"bounds", "--bound", "B_PR01", "--source", "cats:8",
                                    "--format", "json", "--strict"});
  CHECK(result.code == 0);
  const json parsed = json::parse(result.out);
  for (const json& rec : parsed) CHECK(rec["verdict"] == "MATCH");

  CHECK(run_cli({"bounds", "--source", "random:count=50,nmax=20,seed=3", "--strict"}).code == 0);
  CHECK(run_cli({"bounds", "--bound", "NOPE"}).code == 1);
}

TEST_CASE("exit codes and error stream") {
  const CliResult unknown_flag = run_cli({"compute", "--tre", "path:3", "--index", "sigma"});
  CHECK(unknown_flag.code == 1);
  CHECK(unknown_flag.err.rfind("error:", 0) == 0);
  CHECK(unknown_flag.err.find('\n') == unknown_flag.err.size() - 1);  // one line

  const CliResult bad_tree = run_cli({"compute", "--tree", "cat:n=0,m=3", "--index", "sigma"});
  CHECK(bad_tree.code == 1);
  CHECK(bad_tree.err.rfind("error:", 0) == 0);

  const CliResult cycle = run_cli({"audit"});
  CHECK(cycle.code == 1);

  CHECK(run_cli({"enumerate", "--n", "31"}).code == 1);  // SizeLimit
  CHECK(run_cli({}).code == 1);
}

TEST_CASE("audit --all --strict holds and is byte-deterministic") {
  const std::vector<std::string> argv = {"audit", "--all", "--format", "json", "--seed", "7"};
  const CliResult first = run_cli(argv);
  const CliResult second = run_cli(argv);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(json::parse(first.out).is_array());

  const CliResult strict = run_cli({"audit", "--all", "--format", "json", "--strict"});
  CHECK(strict.code == 0);
}

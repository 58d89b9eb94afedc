#include "catindex/cli.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "catindex/audit.hpp"
#include "catindex/closed_forms.hpp"
#include "catindex/constructors.hpp"
#include "catindex/enumerate.hpp"
#include "catindex/indices.hpp"
#include "catindex/report.hpp"

namespace catindex::cli {

namespace {

struct Options {
  std::string tree_spec;
  std::string index_spec;
  std::string claim_id;
  bool all = false;
  std::string grid;
  std::string format = "text";
  bool strict = false;
  std::uint64_t seed = 0;
  std::string bound_id;
  std::string source = "cats:12";
  bool seed_given = false;
  std::string table_id;
  int n = 0;
  bool count_only = false;
  int cap = kDefaultEnumerationCap;
  std::string objective = "max";
};

std::string format_index_value(const IndexValue& value) {
  if (value.exact) return std::to_string(*value.exact);
  return format_real(value.approx);
}

int emit_records(const Options& opt, const std::vector<VerdictRecord>& records,
                 std::ostream& out) {
  out << records_to(parse_format(opt.format), records);
  if (opt.strict && !policy_violations(records).empty()) return 2;
  return 0;
}

int run_compute(const Options& opt, std::ostream& out) {
  const Tree t = parse_tree_spec(opt.tree_spec, vertex_cap_from_env());
  const IndexKind kind = parse_index_spec(opt.index_spec);
  const IndexValue value = compute(t, kind);
  if (parse_format(opt.format) == Format::Json) {
    out << "{\"tree\": \"" << json_escape(opt.tree_spec) << "\", \"index\": \""
        << json_escape(kind.name()) << "\", \"value\": " << format_index_value(value) << "}\n";
  } else {
    out << format_index_value(value) << "\n";
  }
  return 0;
}

int run_audit(const Options& opt, std::ostream& out) {
  std::optional<GridSpec> grid;
  if (!opt.grid.empty()) grid = GridSpec::parse(opt.grid);

  std::vector<VerdictRecord> records;
  if (opt.all) {
    if (grid) fail(ErrorCode::ParseError, "--grid cannot be combined with --all");
    records = audit_all();
  } else if (!opt.claim_id.empty()) {
    records = audit_claim(opt.claim_id, grid);
  } else {
    fail(ErrorCode::ParseError, "audit needs --claim ID or --all");
  }
  return emit_records(opt, records, out);
}

int run_bounds(const Options& opt, std::ostream& out) {
  TreeSource source = parse_tree_source(opt.source);
  if (opt.seed_given) {
    if (auto* random = std::get_if<RandomTreeSource>(&source);
        random && opt.source.find("seed=") == std::string::npos)
      random->seed = opt.seed;
  }

  std::vector<VerdictRecord> records;
  if (opt.all || opt.bound_id.empty()) {
    for (BoundId b : all_bounds()) {
      std::vector<VerdictRecord> batch = check_bound(b, source);
      records.insert(records.end(), batch.begin(), batch.end());
    }
  } else {
    records = check_bound(parse_bound_id(opt.bound_id), source);
  }
  sort_records(records);
  return emit_records(opt, records, out);
}

int run_table(const Options& opt, std::ostream& out) {
  return emit_records(opt, reproduce_table(parse_table_id(opt.table_id)), out);
}

int run_enumerate(const Options& opt, std::ostream& out) {
  if (opt.count_only) {
    const CountResult counts = count_caterpillars(opt.n, opt.cap);
    const std::string formula = counts.formula_count.str();
    const std::string enumerated =
        counts.enumerated_count ? std::to_string(*counts.enumerated_count) : "-";
    if (parse_format(opt.format) == Format::Json) {
      out << "{\"n\": " << opt.n << ", \"formula_count\": " << formula
          << ", \"enumerated_count\": "
          << (counts.enumerated_count ? enumerated : std::string("null")) << "}\n";
    } else {
      out << formula << " " << enumerated << "\n";
    }
    return 0;
  }

  if (parse_format(opt.format) == Format::Json) {
    const EnumerationResult result = enumerate_caterpillars(opt.n, opt.cap);
    out << "{\"n\": " << opt.n << ", \"count\": " << result.count << ", \"codes\": [";
    for (std::size_t i = 0; i < result.codes.size(); ++i) {
      if (i) out << ", ";
      out << "\"" << result.codes[i].str() << "\"";
    }
    out << "]}\n";
  } else {
    // streamed in enumeration order: spine length ascending, lexicographic
    // within each length
    for_each_caterpillar(
        opt.n, [&](const CaterpillarCode& code) { out << code.str() << "\n"; }, opt.cap);
  }
  return 0;
}

int run_extremal(const Options& opt, std::ostream& out) {
  Objective objective;
  if (opt.objective == "max")
    objective = Objective::Max;
  else if (opt.objective == "min")
    objective = Objective::Min;
  else
    fail(ErrorCode::ParseError, "--objective must be max or min");

  const IndexKind kind = parse_index_spec(opt.index_spec);
  const ExtremalResult result = extremal_search(opt.n, kind, objective, opt.cap);
  if (parse_format(opt.format) == Format::Json) {
    out << "{\"n\": " << opt.n << ", \"index\": \"" << json_escape(kind.name())
        << "\", \"objective\": \"" << opt.objective
        << "\", \"value\": " << format_index_value(result.value) << ", \"witness\": \""
        << result.witness.str() << "\"}\n";
  } else {
    out << format_index_value(result.value) << " " << result.witness.str() << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"catindex: degree-based index oracles, closed-form claims and audits "
               "for caterpillar trees"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* compute_cmd = app.add_subcommand("compute", "compute one index of one tree");
  compute_cmd->add_option("--tree", opt.tree_spec, "tree spec (cat:n=3,m=3 | code:1,0,1 | "
                          "level:3,4,5 | spider:2,2,2 | path:7 | star:9 | file:PATH)")
      ->required();
  compute_cmd->add_option("--index", opt.index_spec, "index spec (albertson | sigma | "
                          "randic[:alpha=..] | general-albertson:p=.. | ...)")
      ->required();
  compute_cmd->add_option("--format", opt.format, "text|json");

  CLI::App* claims_cmd = app.add_subcommand("claims", "dump the claim registry as JSON");

  CLI::App* audit_cmd = app.add_subcommand("audit", "run claims against the oracle");
  audit_cmd->add_option("--claim", opt.claim_id, "claim or consistency-pair id");
  audit_cmd->add_flag("--all", opt.all, "every registered claim on its default grid");
  audit_cmd->add_option("--grid", opt.grid, "parameter grid, e.g. n=3..50,m=3..5");
  audit_cmd->add_option("--format", opt.format, "json|csv|text");
  audit_cmd->add_flag("--strict", opt.strict, "exit 2 on any audit-policy violation");
  audit_cmd->add_option("--seed", opt.seed, "seed recorded with the run");

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "check inequality bounds over a tree corpus");
  bounds_cmd->add_option("--bound", opt.bound_id, "bound id (B_PR01, B_LEM1, B_PAA, "
                         "B_IRRT_TREE, B_IRRT_GEN, B_DORJ_LOWER, B_DORJ_UPPER)");
  bounds_cmd->add_flag("--all", opt.all, "every bound");
  bounds_cmd->add_option("--source", opt.source,
                         "cats:N | random:count=..,nmax=..,seed=.. | tree spec");
  bounds_cmd->add_option("--format", opt.format, "json|csv|text");
  bounds_cmd->add_flag("--strict", opt.strict, "exit 2 on any hard-bound violation");
  bounds_cmd->add_option("--seed", opt.seed, "seed for a random source without an explicit seed");

  CLI::App* table_cmd = app.add_subcommand("table", "recompute an embedded table fixture");
  table_cmd->add_option("--id", opt.table_id, "table1|table2|table3")->required();
  table_cmd->add_option("--format", opt.format, "json|csv|text");
  table_cmd->add_flag("--strict", opt.strict, "exit 2 when a fixture cell mismatches");

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "canonical caterpillar codes on n vertices");
  enum_cmd->add_option("--n", opt.n, "vertex count")->required();
  enum_cmd->add_flag("--count-only", opt.count_only, "print formula and enumerated counts only");
  enum_cmd->add_option("--cap", opt.cap, "enumeration cap");
  enum_cmd->add_option("--format", opt.format, "text|json");

  CLI::App* extremal_cmd = app.add_subcommand("extremal", "extremal caterpillar for an index");
  extremal_cmd->add_option("--n", opt.n, "vertex count")->required();
  extremal_cmd->add_option("--index", opt.index_spec, "index spec")->required();
  extremal_cmd->add_option("--objective", opt.objective, "max|min");
  extremal_cmd->add_option("--cap", opt.cap, "enumeration cap");
  extremal_cmd->add_option("--format", opt.format, "text|json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      out << app.help();
      return 0;
    }
    err << "error: usage: " << e.what() << "\n";
    return 1;
  }

  opt.seed_given = bounds_cmd->count("--seed") > 0;

  try {
    if (compute_cmd->parsed()) return run_compute(opt, out);
    if (claims_cmd->parsed()) {
      out << claims_to_json();
      return 0;
    }
    if (audit_cmd->parsed()) return run_audit(opt, out);
    if (bounds_cmd->parsed()) return run_bounds(opt, out);
    if (table_cmd->parsed()) return run_table(opt, out);
    if (enum_cmd->parsed()) return run_enumerate(opt, out);
    if (extremal_cmd->parsed()) return run_extremal(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace catindex::cli

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "catindex/audit.hpp"
#include "catindex/cli.hpp"
#include "catindex/closed_forms.hpp"
#include "catindex/constructors.hpp"
#include "catindex/enumerate.hpp"
#include "catindex/indices.hpp"
#include "catindex/report.hpp"

namespace py = pybind11;
using namespace catindex;

namespace {

py::object index_value_to_py(const IndexValue& value) {
  if (value.exact) return py::int_(*value.exact);
  return py::float_(value.approx);
}

py::object claim_value_to_py(const ClaimValue& value) {
  if (value.exact && value.rat.is_integer()) return py::int_(value.rat.to_integer());
  return py::float_(value.approx);
}

py::dict params_to_py(const Params& params) {
  py::dict out;
  for (const auto& [name, v] : params.items()) out[py::str(name)] = py::int_(v);
  return out;
}

Params params_from_py(const py::dict& d) {
  Params out;
  for (auto item : d)
    out.set(py::cast<std::string>(item.first), py::cast<std::int64_t>(item.second));
  return out;
}

py::dict record_to_py(const VerdictRecord& rec) {
  py::dict out;
  out["claim_id"] = rec.claim_id;
  out["params"] = params_to_py(rec.params);
  out["closed_form_value"] = rec.closed_form_value.is_int
                                 ? py::object(py::int_(rec.closed_form_value.int_value))
                                 : py::object(py::float_(rec.closed_form_value.value));
  out["oracle_value"] =
      rec.oracle_value ? (rec.oracle_value->is_int
                              ? py::object(py::int_(rec.oracle_value->int_value))
                              : py::object(py::float_(rec.oracle_value->value)))
                       : py::object(py::none());
  out["abs_diff"] = rec.abs_diff ? py::object(py::float_(*rec.abs_diff)) : py::object(py::none());
  out["verdict"] = std::string(to_string(rec.verdict));
  out["comparison"] = std::string(to_string(rec.comparison));
  out["note"] = rec.note;
  return out;
}

py::list records_to_py(const std::vector<VerdictRecord>& records) {
  py::list out;
  for (const VerdictRecord& rec : records) out.append(record_to_py(rec));
  return out;
}

}  // namespace

PYBIND11_MODULE(catindex, m) {
  m.doc() = "Degree-based topological index oracles, closed-form claim registry and "
            "audits for caterpillar trees";

  py::register_exception<Error>(m, "CatindexError");

  py::class_<Tree>(m, "Tree")
      .def_property_readonly("vertex_count", &Tree::vertex_count)
      .def_property_readonly("edge_count", &Tree::edge_count)
      .def("degree", &Tree::degree, py::arg("v"))
      .def("neighbors",
           [](const Tree& t, int v) {
             auto nb = t.neighbors(v);
             return std::vector<int>(nb.begin(), nb.end());
           },
           py::arg("v"))
      .def("degree_sequence", &Tree::degree_sequence)
      .def("edges",
           [](const Tree& t) {
             std::vector<std::pair<int, int>> out;
             t.for_each_edge([&](EdgeView e) { out.emplace_back(e.u, e.v); });
             return out;
           })
      .def("__eq__", [](const Tree& a, const Tree& b) { return a == b; })
      .def("__repr__", [](const Tree& t) {
        return "<catindex.Tree n=" + std::to_string(t.vertex_count()) + ">";
      });

  m.def("from_edge_list",
        [](std::int64_t n, const std::vector<std::pair<int, int>>& edges) {
          return Tree::from_edge_list(n, edges);
        },
        py::arg("n"), py::arg("edges"));
  m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));
  m.def("path_imbalance",
        [](const Tree& t, const std::vector<int>& path) { return path_imbalance(t, path); },
        py::arg("tree"), py::arg("path"));
  m.def("parse_tree_spec",
        [](const std::string& spec) { return parse_tree_spec(spec, vertex_cap_from_env()); },
        py::arg("spec"));
  m.def("caterpillar",
        [](std::int64_t n, std::int64_t m) { return caterpillar(n, m, vertex_cap_from_env()); },
        py::arg("n"), py::arg("m"));
  m.def("from_code",
        [](const std::vector<std::int64_t>& code) {
          return from_code(CaterpillarCode{code}, vertex_cap_from_env());
        },
        py::arg("leaf_counts"));
  m.def("level_tree",
        [](const std::vector<std::int64_t>& branching) {
          return level_tree(LevelTreeSpec{branching}, vertex_cap_from_env());
        },
        py::arg("branching"));
  m.def("spider",
        [](const std::vector<std::int64_t>& legs) { return spider(legs, vertex_cap_from_env()); },
        py::arg("leg_lengths"));

  m.def("compute",
        [](const Tree& t, const std::string& index) {
          return index_value_to_py(compute(t, parse_index_spec(index)));
        },
        py::arg("tree"), py::arg("index"));
  m.def("general_albertson",
        [](const Tree& t, double p) { return general_albertson(t, p); },
        py::arg("tree"), py::arg("p"));
  m.def("largest_eigenvalue", &largest_eigenvalue, py::arg("tree"), py::arg("tol") = 1e-10,
        py::arg("max_iter") = 100000);

  m.def("evaluate",
        [](const std::string& id, const py::dict& params) {
          return claim_value_to_py(evaluate(id, params_from_py(params)));
        },
        py::arg("claim_id"), py::arg("params"));
  m.def("claims", [] {
    py::list out;
    for (const Claim& c : claim_registry()) {
      py::dict item;
      item["id"] = c.id;
      item["statement"] = c.statement;
      item["domain"] = c.domain_desc;
      item["comparison"] = std::string(to_string(c.comparison));
      item["family"] = c.family_desc;
      item["note"] = c.note;
      out.append(item);
    }
    return out;
  });

  m.def("audit_claim",
        [](const std::string& id, const std::string& grid) {
          std::optional<GridSpec> spec;
          if (!grid.empty()) spec = GridSpec::parse(grid);
          return records_to_py(audit_claim(id, spec));
        },
        py::arg("claim_id"), py::arg("grid") = std::string());
  m.def("audit_all", [] { return records_to_py(audit_all()); });
  m.def("check_bound",
        [](const std::string& bound, const std::string& source) {
          return records_to_py(check_bound(parse_bound_id(bound), parse_tree_source(source)));
        },
        py::arg("bound_id"), py::arg("source") = std::string("cats:12"));
  m.def("reproduce_table",
        [](const std::string& table) { return records_to_py(reproduce_table(parse_table_id(table))); },
        py::arg("table_id"));

  m.def("enumerate_caterpillars",
        [](int n, int cap) {
          const EnumerationResult result = enumerate_caterpillars(n, cap);
          std::vector<std::vector<std::int64_t>> codes;
          codes.reserve(result.codes.size());
          for (const CaterpillarCode& c : result.codes) codes.push_back(c.leaf_counts);
          return codes;
        },
        py::arg("n"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("count_caterpillars",
        [](int n, int cap) {
          const CountResult counts = count_caterpillars(n, cap);
          py::object enumerated =
              counts.enumerated_count ? py::object(py::int_(*counts.enumerated_count))
                                      : py::object(py::none());
          return py::make_tuple(py::int_(counts.formula_count.to_integer()), enumerated);
        },
        py::arg("n"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("extremal_search",
        [](int n, const std::string& index, const std::string& objective, int cap) {
          const Objective obj = objective == "max"   ? Objective::Max
                                : objective == "min" ? Objective::Min
                                                     : throw Error(ErrorCode::ParseError,
                                                                   "objective must be max or min");
          const ExtremalResult result = extremal_search(n, parse_index_spec(index), obj, cap);
          py::dict out;
          out["value"] = index_value_to_py(result.value);
          out["witness"] = result.witness.leaf_counts;
          return out;
        },
        py::arg("n"), py::arg("index"), py::arg("objective") = std::string("max"),
        py::arg("cap") = kDefaultEnumerationCap);
  m.def("encode_caterpillar",
        [](const Tree& t) { return encode_caterpillar(t).leaf_counts; }, py::arg("tree"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}

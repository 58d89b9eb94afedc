#include "catindex/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "catindex/constructors.hpp"

namespace catindex {

void Params::set(const std::string& name, std::int64_t value) {
  for (auto& [k, v] : items_) {
    if (k == name) {
      v = value;
      return;
    }
  }
  items_.emplace_back(name, value);
}

std::int64_t Params::get(const std::string& name) const {
  for (const auto& [k, v] : items_)
    if (k == name) return v;
  fail(ErrorCode::DomainViolation, "missing parameter '" + name + "'");
}

bool Params::has(const std::string& name) const {
  for (const auto& [k, v] : items_) {
    (void)v;
    if (k == name) return true;
  }
  return false;
}

std::string Params::str() const {
  std::string out;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ",";
    out += items_[i].first + "=" + std::to_string(items_[i].second);
  }
  return out;
}

std::string ClaimValue::str() const {
  if (exact) return rat.str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", approx);
  return buf;
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::OracleEquality: return "oracle-equality";
    case Comparison::OracleInformational: return "oracle-informational";
    case Comparison::FormulaConsistency: return "formula-consistency";
    case Comparison::TableFixture: return "table-fixture";
    case Comparison::Bound: return "bound";
  }
  return "?";
}

namespace {

using I = std::int64_t;

Rational rat(I v) { return Rational(v); }

std::function<Expect(const Params&)> always(Expect e) {
  return [e](const Params&) { return e; };
}

std::function<std::vector<Params>()> grid1(const std::string& name, I lo, I hi,
                                           std::vector<I> extra = {}) {
  return [=]() {
    std::vector<Params> out;
    for (I v = lo; v <= hi; ++v) out.push_back(Params{{name, v}});
    for (I v : extra) out.push_back(Params{{name, v}});
    return out;
  };
}

std::function<std::vector<Params>()> grid2(const std::string& a, I alo, I ahi,
                                           const std::string& b, I blo, I bhi) {
  return [=]() {
    std::vector<Params> out;
    for (I x = alo; x <= ahi; ++x)
      for (I y = blo; y <= bhi; ++y) out.push_back(Params{{a, x}, {b, y}});
    return out;
  };
}

// (n, n+1, n+2)-style grids for the multi-level families.
std::function<std::vector<Params>()> consecutive_grid(std::vector<std::string> names, I lo, I hi) {
  return [names = std::move(names), lo, hi]() {
    std::vector<Params> out;
    for (I v = lo; v <= hi; ++v) {
      Params p;
      for (std::size_t i = 0; i < names.size(); ++i)
        p.set(names[i], v + static_cast<I>(i));
      out.push_back(p);
    }
    return out;
  };
}

std::function<Tree(const Params&)> cat_family(I m) {
  return [m](const Params& ps) { return caterpillar(ps.get("n"), m, vertex_cap_from_env()); };
}

Tree cat_nm(const Params& ps) {
  return caterpillar(ps.get("n"), ps.get("m"), vertex_cap_from_env());
}

std::function<Tree(const Params&)> level_family(std::vector<std::string> names,
                                                std::vector<I> offsets_from_first) {
  return [names = std::move(names), offsets = std::move(offsets_from_first)](const Params& ps) {
    std::vector<I> branching;
    if (!names.empty()) {
      for (const auto& name : names) branching.push_back(ps.get(name));
    } else {
      const I base = ps.get("d1");
      for (I off : offsets) branching.push_back(base + off);
    }
    return level_tree(LevelTreeSpec{branching}, vertex_cap_from_env());
  };
}

constexpr const char* kExternalSombor = "definition: external-standard";

std::vector<Claim> build_registry() {
  std::vector<Claim> reg;

  auto domain_n3 = [](const Params& ps) { return ps.get("n") >= 3; };
  auto domain_nm3 = [](const Params& ps) { return ps.get("n") >= 3 && ps.get("m") >= 3; };

  // ---- Albertson closed forms ----
  reg.push_back(Claim{
      "P_PROJAS",
      "irr(C(n,3)) = 12n - 4",
      "n >= 3",
      {"n"},
      domain_n3,
      [](const Params& ps) { return ClaimValue::of(rat(12) * ps.get("n") - rat(4)); },
      Comparison::OracleEquality,
      OracleSource::Family,
      IndexKind::albertson(),
      cat_family(3),
      "caterpillar(n,3)",
      always(Expect::Match),
      "",
      grid1("n", 3, 50, {60, 70, 80, 90, 100, 110, 150, 200, 250, 300, 400, 500, 600, 650, 700,
                         750, 800, 850, 900, 950, 1000}),
  });

  reg.push_back(Claim{
      "P_GEN_NM",
      "irr(C(n,m)) = m(m+1)n - 2m + 2",
      "n >= 3, m >= 1",
      {"n", "m"},
      [](const Params& ps) { return ps.get("n") >= 3 && ps.get("m") >= 1; },
      [](const Params& ps) {
        const Rational n = rat(ps.get("n")), m = rat(ps.get("m"));
        return ClaimValue::of(m * (m + rat(1)) * n - rat(2) * m + rat(2));
      },
      Comparison::OracleEquality,
      OracleSource::Family,
      IndexKind::albertson(),
      cat_nm,
      "caterpillar(n,m)",
      always(Expect::Match),
      "",
      grid2("n", 3, 50, "m", 3, 5),
  });

  reg.push_back(Claim{
      "P_PRO4",
      "irr(C(n,4)) = 20n - 6",
      "n >= 3",
      {"n"},
      domain_n3,
      [](const Params& ps) { return ClaimValue::of(rat(20) * ps.get("n") - rat(6)); },
      Comparison::OracleEquality,
      OracleSource::Family,
      IndexKind::albertson(),
      cat_family(4),
      "caterpillar(n,4)",
      always(Expect::Match),
      "",
      grid1("n", 3, 50),
  });

  reg.push_back(Claim{
      "P_PRO5",
      "irr(C(n,5)) = 30n - 8",
      "n >= 3",
      {"n"},
      domain_n3,
      [](const Params& ps) { return ClaimValue::of(rat(30) * ps.get("n") - rat(8)); },
      Comparison::OracleEquality,
      OracleSource::Family,
      IndexKind::albertson(),
      cat_family(5),
      "caterpillar(n,5)",
      always(Expect::Match),
      "",
      grid1("n", 3, 50),
  });

  reg.push_back(Claim{
      "T_THM2",
      "irr(C(n,m)) = (m-2)(10n-1)",
      "n >= 3, m >= 3",
      {"n", "m"},
      domain_nm3,
      [](const Params& ps) {
        const Rational n = rat(ps.get("n")), m = rat(ps.get("m"));
        return ClaimValue::of((m - rat(2)) * (rat(10) * n - rat(1)));
      },
      Comparison::OracleEquality,
      OracleSource::Family,
      IndexKind::albertson(),
      cat_nm,
      "caterpillar(n,m)",
      always(Expect::Mismatch),
      "",
      grid2("n", 3, 50, "m", 3, 5),
  });

  reg.push_back(Claim{
      "T_THM2_PROOF",
      "irr(C(n,m)) = (m-2)(10n+1) - (m-2)",
      "n >= 3, m >= 3",
      {"n", "m"},
      domain_nm3,
      [](const Params& ps) {
        const Rational n = rat(ps.get("n")), m = rat(ps.get("m"));
        return ClaimValue::of((m - rat(2)) * (rat(10) * n + rat(1)) - (m - rat(2)));
      },
      Comparison::OracleEquality,
      OracleSource::Family,
      IndexKind::albertson(),
      cat_nm,
      "caterpillar(n,m)",
      always(Expect::Mismatch),
      "",
      grid2("n", 3, 50, "m", 3, 5),
  });

  reg.push_back(Claim{
      "T_THM201_A",
      "irr(C(n,m,r)) = n^2(r^2 - 2r) + n(n+1)",
      "n >= 3, r >= 3",
      {"n", "r"},
      [](const Params& ps) { return ps.get("n") >= 3 && ps.get("r") >= 3; },
      [](const Params& ps) {
        const Rational n = rat(ps.get("n")), r = rat(ps.get("r"));
        return ClaimValue::of(n * n * (r * r - rat(2) * r) + n * (n + rat(1)));
      },
      Comparison::OracleInformational,
      OracleSource::Family,
      IndexKind::albertson(),
      level_family({"n"}, {}),  // placeholder, replaced below
      "level_tree(n, n+1, r)",
      always(Expect::Mismatch),
      "level interpretation: complete branching (n, n+1, r)",
      [] {
        std::vector<Params> out;
        for (I n = 3; n <= 12; ++n) out.push_back(Params{{"n", n}, {"r", n + 2}});
        return out;
      },
  });
  reg.back().family = [](const Params& ps) {
    return level_tree(LevelTreeSpec{{ps.get("n"), ps.get("n") + 1, ps.get("r")}},
                      vertex_cap_from_env());
  };

  reg.push_back(Claim{
      "T_THM201_B",
      "irr(C(n,m,r)) = (13/18)(n^3 + m^3 + r^3)",
      "n >= 3, m >= 3, r >= 3",
      {"n", "m", "r"},
      [](const Params& ps) {
        return ps.get("n") >= 3 && ps.get("m") >= 3 && ps.get("r") >= 3;
      },
      [](const Params& ps) {
        const Rational n = rat(ps.get("n")), m = rat(ps.get("m")), r = rat(ps.get("r"));
        return ClaimValue::of(Rational(13, 18) * (n * n * n + m * m * m + r * r * r));
      },
      Comparison::OracleInformational,
      OracleSource::Family,
      IndexKind::albertson(),
      level_family({"n", "m", "r"}, {}),
      "level_tree(n, m, r)",
      always(Expect::None),
      "level interpretation: complete branching (n, m, r)",
      consecutive_grid({"n", "m", "r"}, 3, 12),
  });

  reg.push_back(Claim{
      "P_SPE1",
      "irr(C(a,b,c,d)) = a^4 - 2a^3 - 3a^2 + 8a + 4ac - 4c + 16, a = b+2, c = b+1",
      "b >= 3",
      {"b"},
      [](const Params& ps) { return ps.get("b") >= 3; },
      [](const Params& ps) {
        const Rational a = rat(ps.get("b") + 2), c = rat(ps.get("b") + 1);
        return ClaimValue::of(a * a * a * a - rat(2) * a * a * a - rat(3) * a * a + rat(8) * a +
                              rat(4) * a * c - rat(4) * c + rat(16));
      },
      Comparison::FormulaConsistency,
      OracleSource::None,
      IndexKind::albertson(),
      nullptr,
      "",
      always(Expect::Match),
      "family not reconstructible; checked against its own coefficient-table form",
      grid1("b", 3, 50),
  });

  auto threec_domain = [](const Params& ps) {
    const I a = ps.get("a"), b = ps.get("b"), c = ps.get("c");
    return a >= b && b >= c && c >= 1;
  };
  auto threec_grid = [] {
    std::vector<Params> out;
    for (I a = 1; a <= 5; ++a)
      for (I b = 1; b <= a; ++b)
        for (I c = 1; c <= b; ++c) out.push_back(Params{{"a", a}, {"b", b}, {"c", c}});
    return out;
  };

  reg.push_back(Claim{
      "L_THREEC_MAX",
      "irr_max = (a-1)^2 + (b-1)^2 + sum_{i=0..3} k_i c^i, "
      "k = (0, -(ab+2a+2b), ab+3(a+b), -(a+b+3))",
      "a >= b >= c >= 1",
      {"a", "b", "c"},
      threec_domain,
      [](const Params& ps) {
        const Rational a = rat(ps.get("a")), b = rat(ps.get("b")), c = rat(ps.get("c"));
        const Rational k1 = -(a * b + rat(2) * a + rat(2) * b);
        const Rational k2 = a * b + rat(3) * (a + b);
        const Rational k3 = -(a + b + rat(3));
        const Rational poly = k1 * c + k2 * c * c + k3 * c * c * c;
        return ClaimValue::of((a - rat(1)) * (a - rat(1)) + (b - rat(1)) * (b - rat(1)) + poly);
      },
      Comparison::OracleInformational,
      OracleSource::None,
      IndexKind::albertson(),
      nullptr,
      "",
      always(Expect::None),
      "no realizing tree family stated; formula evaluated only",
      threec_grid,
  });

  reg.push_back(Claim{
      "L_THREEC_MIN",
      "irr_min = (a-1)^2 + (c-1)^2 + (b-1)(b-2) + (a-c)",
      "a >= b >= c >= 1",
      {"a", "b", "c"},
      threec_domain,
      [](const Params& ps) {
        const Rational a = rat(ps.get("a")), b = rat(ps.get("b")), c = rat(ps.get("c"));
        return ClaimValue::of((a - rat(1)) * (a - rat(1)) + (c - rat(1)) * (c - rat(1)) +
                              (b - rat(1)) * (b - rat(2)) + (a - c));
      },
      Comparison::OracleInformational,
      OracleSource::None,
      IndexKind::albertson(),
      nullptr,
      "",
      always(Expect::None),
      "no realizing tree family stated; formula evaluated only",
      threec_grid,
  });

  // ---- Sigma closed forms ----
  reg.push_back(Claim{
      "P_POO",
      "sigma(C(n,3)) = 48(n-2) + 56",
      "n >= 3",
      {"n"},
      domain_n3,
      [](const Params& ps) { return ClaimValue::of(rat(48) * (rat(ps.get("n")) - rat(2)) + rat(56)); },
      Comparison::OracleEquality,
      OracleSource::Family,
      IndexKind::sigma(),
      cat_family(3),
      "caterpillar(n,3)",
      always(Expect::Match),
      "companion figure prints sigma(C(6,3)) = 296; the table prints 248; fixtures follow the table",
      grid1("n", 3, 50, {60, 70, 80, 90, 95, 100}),
  });

  reg.push_back(Claim{
      "P_SIGM4",
      "sigma(C(n,4)) = 100n - 70",
      "n >= 3",
      {"n"},
      domain_n3,
      [](const Params& ps) { return ClaimValue::of(rat(100) * ps.get("n") - rat(70)); },
      Comparison::OracleEquality,
      OracleSource::Family,
      IndexKind::sigma(),
      cat_family(4),
      "caterpillar(n,4)",
      always(Expect::Match),
      "",
      grid1("n", 3, 50),
  });

  reg.push_back(Claim{
      "P_SIGMA5",
      "sigma(C(n,5)) = 180n - 108",
      "n >= 3",
      {"n"},
      domain_n3,
      [](const Params& ps) { return ClaimValue::of(rat(180) * ps.get("n") - rat(108)); },
      Comparison::OracleEquality,
      OracleSource::Family,
      IndexKind::sigma(),
      cat_family(5),
      "caterpillar(n,5)",
      always(Expect::Match),
      "",
      grid1("n", 3, 50),
  });

  reg.push_back(Claim{
      "T_THM4",
      "sigma(C(n,m)) = m^3 n + 2m^3 + m^2 n - 6m^2 - mn + 6m - n + 6",
      "n >= 3, m >= 3",
      {"n", "m"},
      domain_nm3,
      [](const Params& ps) {
        const Rational n = rat(ps.get("n")), m = rat(ps.get("m"));
        const Rational m2 = m * m, m3 = m * m * m;
        return ClaimValue::of(m3 * n + rat(2) * m3 + m2 * n - rat(6) * m2 - m * n + rat(6) * m -
                              n + rat(6));
      },
      Comparison::OracleEquality,
      OracleSource::Family,
      IndexKind::sigma(),
      cat_nm,
      "caterpillar(n,m)",
      [](const Params& ps) {
        return ps.get("n") == 4 && ps.get("m") == 3 ? Expect::Match : Expect::Mismatch;
      },
      "at m = 3 the formula reads 32n + 24 against the oracle's 48n - 40; "
      "they cross exactly at n = 4",
      grid2("n", 3, 50, "m", 3, 5),
  });

  reg.push_back(Claim{
      "T_THM4_BOUND",
      "sigma(C(n,m)) <= (52m - 108)n - (30m + 34)",
      "n >= 3, m >= 3",
      {"n", "m"},
      domain_nm3,
      [](const Params& ps) {
        const Rational n = rat(ps.get("n")), m = rat(ps.get("m"));
        return ClaimValue::of((rat(52) * m - rat(108)) * n - (rat(30) * m + rat(34)));
      },
      Comparison::Bound,
      OracleSource::Family,
      IndexKind::sigma(),
      cat_nm,
      "caterpillar(n,m)",
      always(Expect::None),
      "interpolated bound from the general-case derivation",
      grid2("n", 3, 50, "m", 3, 5),
  });

  reg.push_back(Claim{
      "T_THM202",
      "sigma(C(n,m,r)) = n(r^2(r-3)(n+1) + (r^3 - 3r + (3n+1)))",
      "n >= 3, r >= 3",
      {"n", "r"},
      [](const Params& ps) { return ps.get("n") >= 3 && ps.get("r") >= 3; },
      [](const Params& ps) {
        const Rational n = rat(ps.get("n")), r = rat(ps.get("r"));
        return ClaimValue::of(n * (r * r * (r - rat(3)) * (n + rat(1)) +
                                   (r * r * r - rat(3) * r + (rat(3) * n + rat(1)))));
      },
      Comparison::OracleInformational,
      OracleSource::Family,
      IndexKind::sigma(),
      nullptr,
      "level_tree(n, n+1, r)",
      always(Expect::None),
      "level interpretation: complete branching (n, n+1, r); duplicated theorem, one entry",
      [] {
        std::vector<Params> out;
        for (I n = 3; n <= 12; ++n) out.push_back(Params{{"n", n}, {"r", n + 2}});
        return out;
      },
  });
  reg.back().family = [](const Params& ps) {
    return level_tree(LevelTreeSpec{{ps.get("n"), ps.get("n") + 1, ps.get("r")}},
                      vertex_cap_from_env());
  };

  reg.push_back(Claim{
      "T_THM202_BOUND",
      "sigma(C(n,m,r)) <= 3((n+m+r)^3/12 - (n+m+r))",
      "n >= 3, m >= 3, r >= 3",
      {"n", "m", "r"},
      [](const Params& ps) {
        return ps.get("n") >= 3 && ps.get("m") >= 3 && ps.get("r") >= 3;
      },
      [](const Params& ps) {
        const Rational s = rat(ps.get("n")) + rat(ps.get("m")) + rat(ps.get("r"));
        return ClaimValue::of(rat(3) * (s * s * s / rat(12) - s));
      },
      Comparison::Bound,
      OracleSource::Family,
      IndexKind::sigma(),
      level_family({"n", "m", "r"}, {}),
      "level_tree(n, m, r)",
      always(Expect::None),
      "approximate-bound variant",
      consecutive_grid({"n", "m", "r"}, 3, 12),
  });

  // ---- Sombor closed forms (standard edge-sum oracle) ----
  struct SomborCase {
    const char* id;
    I m;
    const char* stmt;
    I mul, add;  // sqrt(mul*(n-3) + add)
  };
  for (const SomborCase& sc : {SomborCase{"SO_PRO3_M3", 3, "SO(C(n,3)) = sqrt(28(n-3) + 66)", 28, 66},
                               SomborCase{"SO_PRO3_M4", 4, "SO(C(n,4)) = sqrt(40(n-3) + 98)", 40, 98},
                               SomborCase{"SO_PRO3_M5", 5, "SO(C(n,5)) = sqrt(54(n-3) + 136)", 54, 136}}) {
    reg.push_back(Claim{
        sc.id,
        sc.stmt,
        "n >= 3",
        {"n"},
        domain_n3,
        [mul = sc.mul, add = sc.add](const Params& ps) {
          return ClaimValue::of(std::sqrt(static_cast<double>(mul * (ps.get("n") - 3) + add)));
        },
        Comparison::OracleEquality,
        OracleSource::Family,
        IndexKind::sombor(),
        cat_family(sc.m),
        "caterpillar(n," + std::to_string(sc.m) + ")",
        always(Expect::Mismatch),
        kExternalSombor,
        grid1("n", 3, 20),
    });
  }

  reg.push_back(Claim{
      "SO_RED_M3",
      "SO_red(C(n,3)) = sqrt(34 + 4(n-3)(n+1))",
      "n >= 3",
      {"n"},
      domain_n3,
      [](const Params& ps) {
        const I n = ps.get("n");
        return ClaimValue::of(std::sqrt(static_cast<double>(34 + (n - 3) * (n + 1) * 4)));
      },
      Comparison::OracleEquality,
      OracleSource::Family,
      IndexKind::reduced_sombor(),
      cat_family(3),
      "caterpillar(n,3)",
      always(Expect::Mismatch),
      kExternalSombor,
      grid1("n", 3, 20),
  });

  for (const SomborCase& sc : {SomborCase{"SO_RED_M4", 4, "SO_red(C(n,4)) = sqrt(57 + 25(n-3))", 25, 57},
                               SomborCase{"SO_RED_M5", 5, "SO_red(C(n,5)) = sqrt(50 + 36(n-3))", 36, 50}}) {
    reg.push_back(Claim{
        sc.id,
        sc.stmt,
        "n >= 3",
        {"n"},
        domain_n3,
        [mul = sc.mul, add = sc.add](const Params& ps) {
          return ClaimValue::of(std::sqrt(static_cast<double>(mul * (ps.get("n") - 3) + add)));
        },
        Comparison::OracleEquality,
        OracleSource::Family,
        IndexKind::reduced_sombor(),
        cat_family(sc.m),
        "caterpillar(n," + std::to_string(sc.m) + ")",
        always(Expect::Mismatch),
        kExternalSombor,
        grid1("n", 3, 20),
    });
  }

  reg.push_back(Claim{
      "SO_THM301",
      "SO(C(d1,d2,d3)) = sqrt(d1(2d1^2 + 5d1 + 7) + d3(d3^2 - 8d3 + 24) - 15), "
      "d2 = d1+1, d3 = d1+2",
      "d1 >= 3",
      {"d1"},
      [](const Params& ps) { return ps.get("d1") >= 3; },
      [](const Params& ps) {
        const double d1 = static_cast<double>(ps.get("d1"));
        const double d3 = d1 + 2;
        return ClaimValue::of(
            std::sqrt(d1 * (2 * d1 * d1 + 5 * d1 + 7) + d3 * (d3 * d3 - 8 * d3 + 24) - 15));
      },
      Comparison::OracleEquality,
      OracleSource::Family,
      IndexKind::sombor(),
      level_family({}, {0, 1, 2}),
      "level_tree(d1, d1+1, d1+2)",
      always(Expect::Mismatch),
      kExternalSombor,
      grid1("d1", 3, 10),
  });

  reg.push_back(Claim{
      "SO_THM302",
      "SO(C(d1,d2,d3,d4)) = sqrt(sum d_i^3 + sum alpha_i d_i^2 + 35 d4 - (d2 + d3) + d1 - 27), "
      "alpha = (3, 2, 2, -10), d_i consecutive",
      "d1 >= 3",
      {"d1"},
      [](const Params& ps) { return ps.get("d1") >= 3; },
      [](const Params& ps) {
        const double d1 = static_cast<double>(ps.get("d1"));
        const double ds[4] = {d1, d1 + 1, d1 + 2, d1 + 3};
        const double alpha[4] = {3, 2, 2, -10};
        double inner = 35 * ds[3] - (ds[1] + ds[2]) + ds[0] - 27;
        for (int i = 0; i < 4; ++i) inner += ds[i] * ds[i] * ds[i] + alpha[i] * ds[i] * ds[i];
        return ClaimValue::of(std::sqrt(inner));
      },
      Comparison::OracleEquality,
      OracleSource::Family,
      IndexKind::sombor(),
      level_family({}, {0, 1, 2, 3}),
      "level_tree(d1, d1+1, d1+2, d1+3)",
      always(Expect::Mismatch),
      kExternalSombor,
      grid1("d1", 3, 10),
  });

  // ---- Randic ----
  reg.push_back(Claim{
      "R_RANDPRO1",
      "R(C(n,3)) = (2n-2)/5 + ((3n-5)/5) sqrt(5)",
      "n >= 3",
      {"n"},
      domain_n3,
      [](const Params& ps) {
        const double n = static_cast<double>(ps.get("n"));
        return ClaimValue::of((2 * n - 2) / 5.0 + (3 * n - 5) / 5.0 * std::sqrt(5.0));
      },
      Comparison::OracleEquality,
      OracleSource::Family,
      IndexKind::randic(-0.5),
      cat_family(3),
      "caterpillar(n,3)",
      [](const Params& ps) { return ps.get("n") == 14 ? Expect::Match : Expect::Mismatch; },
      "oracle constant term is (n+12)/5; equality holds only at n = 14",
      grid1("n", 3, 50),
  });

  // ---- Sum-connectivity ----
  reg.push_back(Claim{
      "X_SUM1_M3",
      "X(C(n,3)) = 1/sqrt(4n d1 - 8n - 2), d1 = 4",
      "n >= 3",
      {"n"},
      domain_n3,
      [](const Params& ps) {
        const double n = static_cast<double>(ps.get("n"));
        return ClaimValue::of(1.0 / std::sqrt(4 * n * 4 - 8 * n - 2));
      },
      Comparison::OracleEquality,
      OracleSource::Family,
      IndexKind::sum_connectivity(-0.5),
      cat_family(3),
      "caterpillar(n,3)",
      always(Expect::Mismatch),
      "d1 bound to the end-spine degree m+1 = 4",
      grid1("n", 3, 50),
  });

  reg.push_back(Claim{
      "X_SUM1_M4",
      "X(C(n,4)) = 1/sqrt(5n(d1 - 3) - 2), d1 = 5",
      "n >= 3",
      {"n"},
      domain_n3,
      [](const Params& ps) {
        const double n = static_cast<double>(ps.get("n"));
        return ClaimValue::of(1.0 / std::sqrt(5 * n * (5 - 3) - 2));
      },
      Comparison::OracleEquality,
      OracleSource::Family,
      IndexKind::sum_connectivity(-0.5),
      cat_family(4),
      "caterpillar(n,4)",
      always(Expect::Mismatch),
      "d1 bound to the end-spine degree m+1 = 5",
      grid1("n", 3, 50),
  });

  reg.push_back(Claim{
      "X_SUMINDEX",
      "X(C(n,m)) = 1/sqrt(d1(nm + n) - nm^2 + n - 2), d1 = m+1",
      "n >= 3, m >= 3",
      {"n", "m"},
      domain_nm3,
      [](const Params& ps) {
        const double n = static_cast<double>(ps.get("n"));
        const double m = static_cast<double>(ps.get("m"));
        const double d1 = m + 1;
        return ClaimValue::of(1.0 / std::sqrt(d1 * (n * m + n) - n * m * m + n - 2));
      },
      Comparison::OracleEquality,
      OracleSource::Family,
      IndexKind::sum_connectivity(-0.5),
      cat_nm,
      "caterpillar(n,m)",
      always(Expect::Mismatch),
      "d1 bound to the end-spine degree m+1",
      grid2("n", 3, 20, "m", 3, 5),
  });

  reg.push_back(Claim{
      "X_THM401",
      "X(C(n,m,r,p)) = n^2/sqrt(1+p) + n(1/sqrt(1+2n) + (1+n)/sqrt(2+n+p) + "
      "(2+sqrt(1+p))/sqrt(1+p)), p = n+3",
      "n >= 3",
      {"n"},
      domain_n3,
      [](const Params& ps) {
        const double n = static_cast<double>(ps.get("n"));
        const double p = n + 3;
        return ClaimValue::of(n * n / std::sqrt(1 + p) +
                              n * (1 / std::sqrt(1 + 2 * n) + (1 + n) / std::sqrt(2 + n + p) +
                                   (2 + std::sqrt(1 + p)) / std::sqrt(1 + p)));
      },
      Comparison::OracleEquality,
      OracleSource::Family,
      IndexKind::sum_connectivity(-0.5),
      level_family({}, {0, 1, 2, 3}),
      "level_tree(n, n+1, n+2, n+3)",
      always(Expect::Mismatch),
      "",
      grid1("n", 3, 10),
  });
  reg.back().family = [](const Params& ps) {
    const I n = ps.get("n");
    return level_tree(LevelTreeSpec{{n, n + 1, n + 2, n + 3}}, vertex_cap_from_env());
  };

  reg.push_back(Claim{
      "X_PROSUM",
      "X(C(D)) = d1(d_{n-1}/sqrt(d_n) + d_{n-2}/sqrt(d_{n-1}+d_n) + 1/sqrt(d1+d2) + 1), "
      "D = (d1, d1+1, d1+2, d1+3)",
      "d1 >= 3",
      {"d1"},
      [](const Params& ps) { return ps.get("d1") >= 3; },
      [](const Params& ps) {
        const double d1 = static_cast<double>(ps.get("d1"));
        const double d2 = d1 + 1, dn1 = d1 + 2, dn = d1 + 3;
        return ClaimValue::of(d1 * (dn1 / std::sqrt(dn) + d2 / std::sqrt(dn1 + dn) +
                                    1 / std::sqrt(d1 + d2) + 1));
      },
      Comparison::OracleEquality,
      OracleSource::Family,
      IndexKind::sum_connectivity(-0.5),
      level_family({}, {0, 1, 2, 3}),
      "level_tree(d1, d1+1, d1+2, d1+3)",
      always(Expect::Mismatch),
      "premise names no family; evaluated on the consecutive-degree level tree",
      grid1("d1", 3, 10),
  });

  // ---- Counting ----
  reg.push_back(Claim{
      "CNT_THM1",
      "C_n = 2^(n-4) + 2^(floor(n/2) - 2)",
      "n >= 3",
      {"n"},
      domain_n3,
      [](const Params& ps) {
        const I n = ps.get("n");
        return ClaimValue::of(Rational::pow2(n - 4) + Rational::pow2(n / 2 - 2));
      },
      Comparison::OracleEquality,
      OracleSource::CaterpillarCount,
      IndexKind::albertson(),
      nullptr,
      "exhaustive caterpillar enumeration",
      always(Expect::Match),
      "rational powers of 2: the two half-powers at n = 3 sum to exactly 1",
      grid1("n", 3, 14),
  });

  return reg;
}

std::vector<ConsistencyPair> build_pairs() {
  std::vector<ConsistencyPair> pairs;

  auto eval_claim = [](const char* id) {
    return [id](const Params& ps) { return evaluate(id, ps); };
  };

  struct GenCase {
    const char* id;
    I m;
    const char* right;
  };
  for (const GenCase& gc : {GenCase{"CONS_GEN_PROJAS", 3, "P_PROJAS"},
                            GenCase{"CONS_GEN_PRO4", 4, "P_PRO4"},
                            GenCase{"CONS_GEN_PRO5", 5, "P_PRO5"}}) {
    pairs.push_back(ConsistencyPair{
        gc.id,
        std::string("P_GEN_NM at m=") + std::to_string(gc.m),
        gc.right,
        {"n"},
        [](const Params& ps) { return ps.get("n") >= 3; },
        [m = gc.m](const Params& ps) {
          Params q;
          q.set("n", ps.get("n"));
          q.set("m", m);
          return evaluate("P_GEN_NM", q);
        },
        eval_claim(gc.right),
        always(Expect::Match),
        "",
        grid1("n", 3, 50),
    });
  }

  pairs.push_back(ConsistencyPair{
      "CONS_THM2_PROOF",
      "T_THM2",
      "T_THM2_PROOF",
      {"n", "m"},
      [](const Params& ps) { return ps.get("n") >= 3 && ps.get("m") >= 3; },
      eval_claim("T_THM2"),
      eval_claim("T_THM2_PROOF"),
      always(Expect::Mismatch),
      "statement and proof line differ by m-2",
      grid2("n", 3, 50, "m", 3, 5),
  });

  pairs.push_back(ConsistencyPair{
      "CONS_THM4_POO",
      "T_THM4 at m=3",
      "P_POO",
      {"n"},
      [](const Params& ps) { return ps.get("n") >= 3; },
      [](const Params& ps) {
        Params q;
        q.set("n", ps.get("n"));
        q.set("m", 3);
        return evaluate("T_THM4", q);
      },
      eval_claim("P_POO"),
      [](const Params& ps) { return ps.get("n") == 4 ? Expect::Match : Expect::Mismatch; },
      "the general theorem does not specialize to the m=3 proposition "
      "(the two lines cross only at n = 4)",
      grid1("n", 3, 50),
  });

  pairs.push_back(ConsistencyPair{
      "CONS_THM201_AB",
      "T_THM201_A at (n, r=n+2)",
      "T_THM201_B at (n, n+1, n+2)",
      {"n"},
      [](const Params& ps) { return ps.get("n") >= 3; },
      [](const Params& ps) {
        Params q;
        q.set("n", ps.get("n"));
        q.set("r", ps.get("n") + 2);
        return evaluate("T_THM201_A", q);
      },
      [](const Params& ps) {
        Params q;
        q.set("n", ps.get("n"));
        q.set("m", ps.get("n") + 1);
        q.set("r", ps.get("n") + 2);
        return evaluate("T_THM201_B", q);
      },
      always(Expect::Mismatch),
      "the two stated variants disagree (147 vs 156 at n = 3)",
      grid1("n", 3, 12),
  });

  pairs.push_back(ConsistencyPair{
      "CONS_SPE1",
      "P_SPE1 polynomial",
      "coefficient-table sum C_0 + C_1 a^4 + C_2 a^3 + C_3 a^2 + C_4 a + C_5 ac + C_6 c",
      {"b"},
      [](const Params& ps) { return ps.get("b") >= 3; },
      [](const Params& ps) { return evaluate("P_SPE1", ps); },
      [](const Params& ps) {
        const Rational a = Rational(ps.get("b") + 2), c = Rational(ps.get("b") + 1);
        const Rational coef[7] = {Rational(16), Rational(1), Rational(-2), Rational(-3),
                                  Rational(8),  Rational(4), Rational(-4)};
        const Rational terms[7] = {Rational(1), a * a * a * a, a * a * a, a * a, a, a * c, c};
        Rational total(0);
        for (int i = 0; i < 7; ++i) total = total + coef[i] * terms[i];
        return ClaimValue::of(total);
      },
      always(Expect::Match),
      "",
      grid1("b", 3, 50),
  });

  return pairs;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> reg = build_registry();
  return reg;
}

const std::vector<ConsistencyPair>& consistency_pairs() {
  static const std::vector<ConsistencyPair> pairs = build_pairs();
  return pairs;
}

const Claim& find_claim(const std::string& id) {
  for (const Claim& c : claim_registry())
    if (c.id == id) return c;
  fail(ErrorCode::UnknownClaim, id);
}

const ConsistencyPair* find_pair(const std::string& id) {
  for (const ConsistencyPair& p : consistency_pairs())
    if (p.id == id) return &p;
  return nullptr;
}

const ConsistencyPair* pair_for_claim(const std::string& claim_id) {
  if (claim_id == "P_SPE1") return find_pair("CONS_SPE1");
  return nullptr;
}

ClaimValue evaluate(const std::string& id, const Params& params) {
  const Claim& claim = find_claim(id);
  for (const std::string& name : claim.param_names)
    if (!params.has(name))
      fail(ErrorCode::DomainViolation, id + " requires parameter '" + name + "'");
  if (!claim.in_domain(params))
    fail(ErrorCode::DomainViolation, id + " domain is " + claim.domain_desc + ", got " + params.str());
  return claim.eval(params);
}

}  // namespace catindex

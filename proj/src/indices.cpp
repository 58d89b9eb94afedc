#include "catindex/indices.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace catindex {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorCode::Overflow, "integer index sum");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorCode::Overflow, "integer index product");
  return out;
}

std::int64_t edge_sum_int(const Tree& t, std::int64_t (*term)(std::int64_t, std::int64_t)) {
  std::int64_t total = 0;
  t.for_each_edge([&](EdgeView e) {
    total = checked_add(total, term(t.degree(e.u), t.degree(e.v)));
  });
  return total;
}

std::int64_t pair_sum_int(const Tree& t, std::int64_t (*term)(std::int64_t, std::int64_t)) {
  const int n = t.vertex_count();
  std::vector<std::int64_t> degs(n);
  for (int v = 0; v < n; ++v) degs[v] = t.degree(v);
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) total = checked_add(total, term(degs[i], degs[j]));
  return total;
}

template <typename F>
double edge_sum_real(const Tree& t, F&& term) {
  double total = 0.0;
  t.for_each_edge([&](EdgeView e) {
    total += term(static_cast<double>(t.degree(e.u)), static_cast<double>(t.degree(e.v)));
  });
  return total;
}

std::int64_t abs_diff(std::int64_t a, std::int64_t b) { return a > b ? a - b : b - a; }
std::int64_t sq_diff(std::int64_t a, std::int64_t b) {
  const std::int64_t d = abs_diff(a, b);
  return checked_mul(d, d);
}

IndexValue integer_value(std::int64_t v) {
  return IndexValue{v, static_cast<double>(v)};
}

IndexValue real_value(double v) { return IndexValue{std::nullopt, v}; }

}  // namespace

IndexKind IndexKind::general_albertson(double p) {
  if (!(p > 0.0) || !std::isfinite(p))
    fail(ErrorCode::DomainViolation, "general Albertson needs finite p > 0");
  return {IndexTag::GeneralAlbertson, p};
}

IndexKind IndexKind::randic(double alpha) {
  if (!std::isfinite(alpha)) fail(ErrorCode::DomainViolation, "Randic alpha must be finite");
  return {IndexTag::Randic, alpha};
}

IndexKind IndexKind::sum_connectivity(double alpha) {
  if (!std::isfinite(alpha)) fail(ErrorCode::DomainViolation, "sum-connectivity alpha must be finite");
  return {IndexTag::SumConnectivity, alpha};
}

std::string IndexKind::name() const {
  auto with_param = [&](const std::string& base, const std::string& pname) {
    std::ostringstream out;
    out << base << ":" << pname << "=" << param;
    return out.str();
  };
  switch (tag) {
    case IndexTag::Albertson: return "albertson";
    case IndexTag::GeneralAlbertson: return with_param("general-albertson", "p");
    case IndexTag::TotalIrregularity: return "total-irregularity";
    case IndexTag::Sigma: return "sigma";
    case IndexTag::TotalSigma: return "total-sigma";
    case IndexTag::Variance: return "variance";
    case IndexTag::Sombor: return "sombor";
    case IndexTag::ReducedSombor: return "reduced-sombor";
    case IndexTag::Randic: return with_param("randic", "alpha");
    case IndexTag::SumConnectivity: return with_param("sum-connectivity", "alpha");
    case IndexTag::Harmonic: return "harmonic";
    case IndexTag::CollatzSinogowitz: return "collatz-sinogowitz";
  }
  return "?";
}

IndexKind parse_index_spec(const std::string& spec) {
  std::string base = spec;
  std::optional<double> value;
  std::string pname;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    base = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    auto eq = rest.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::ParseError, "index parameter needs name=value, got '" + rest + "'");
    pname = rest.substr(0, eq);
    try {
      std::size_t pos = 0;
      value = std::stod(rest.substr(eq + 1), &pos);
      if (pos != rest.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad index parameter value in '" + spec + "'");
    }
  }

  auto no_param = [&](IndexKind kind) {
    if (value) fail(ErrorCode::ParseError, "index '" + base + "' takes no parameter");
    return kind;
  };
  auto param_named = [&](const std::string& expect) {
    if (value && pname != expect)
      fail(ErrorCode::ParseError, "index '" + base + "' expects parameter '" + expect + "'");
  };

  if (base == "albertson") return no_param(IndexKind::albertson());
  if (base == "total-irregularity") return no_param(IndexKind::total_irregularity());
  if (base == "sigma") return no_param(IndexKind::sigma());
  if (base == "total-sigma") return no_param(IndexKind::total_sigma());
  if (base == "variance") return no_param(IndexKind::variance());
  if (base == "sombor") return no_param(IndexKind::sombor());
  if (base == "reduced-sombor") return no_param(IndexKind::reduced_sombor());
  if (base == "harmonic") return no_param(IndexKind::harmonic());
  if (base == "collatz-sinogowitz") return no_param(IndexKind::collatz_sinogowitz());
  if (base == "general-albertson") {
    param_named("p");
    if (!value) fail(ErrorCode::ParseError, "general-albertson requires :p=...");
    return IndexKind::general_albertson(*value);
  }
  if (base == "randic") {
    param_named("alpha");
    return IndexKind::randic(value.value_or(-0.5));
  }
  if (base == "sum-connectivity") {
    param_named("alpha");
    return IndexKind::sum_connectivity(value.value_or(-0.5));
  }
  fail(ErrorCode::ParseError, "unknown index '" + base + "'");
}

IndexValue compute(const Tree& t, const IndexKind& kind) {
  const int n = t.vertex_count();
  if (n == 0) fail(ErrorCode::EmptyGraph, "index of the empty graph");

  switch (kind.tag) {
    case IndexTag::Albertson:
      return integer_value(edge_sum_int(t, abs_diff));
    case IndexTag::Sigma:
      return integer_value(edge_sum_int(t, sq_diff));
    case IndexTag::TotalIrregularity:
      return integer_value(pair_sum_int(t, abs_diff));
    case IndexTag::TotalSigma:
      return integer_value(pair_sum_int(t, sq_diff));
    case IndexTag::GeneralAlbertson:
      return real_value(general_albertson(t, kind.param));
    case IndexTag::Variance: {
      std::int64_t sum = 0, sum_sq = 0;
      for (int v = 0; v < n; ++v) {
        const std::int64_t d = t.degree(v);
        sum = checked_add(sum, d);
        sum_sq = checked_add(sum_sq, checked_mul(d, d));
      }
      // n*sum_sq - sum^2 over n^2, evaluated exactly before the division.
      const __int128 num = static_cast<__int128>(n) * sum_sq - static_cast<__int128>(sum) * sum;
      return real_value(static_cast<double>(num) / (static_cast<double>(n) * n));
    }
    case IndexTag::Sombor:
      return real_value(edge_sum_real(t, [](double a, double b) { return std::sqrt(a * a + b * b); }));
    case IndexTag::ReducedSombor:
      return real_value(edge_sum_real(t, [](double a, double b) {
        return std::sqrt((a - 1) * (a - 1) + (b - 1) * (b - 1));
      }));
    case IndexTag::Randic: {
      const double alpha = kind.param;
      return real_value(edge_sum_real(t, [alpha](double a, double b) { return std::pow(a * b, alpha); }));
    }
    case IndexTag::SumConnectivity: {
      const double alpha = kind.param;
      return real_value(edge_sum_real(t, [alpha](double a, double b) { return std::pow(a + b, alpha); }));
    }
    case IndexTag::Harmonic:
      return real_value(edge_sum_real(t, [](double a, double b) { return 2.0 / (a + b); }));
    case IndexTag::CollatzSinogowitz: {
      const double lambda1 = largest_eigenvalue(t);
      return real_value(lambda1 - 2.0 * t.edge_count() / n);
    }
  }
  fail(ErrorCode::DomainViolation, "unhandled index kind");
}

double general_albertson(const Tree& t, double p) {
  if (!(p > 0.0) || !std::isfinite(p))
    fail(ErrorCode::DomainViolation, "general Albertson needs finite p > 0");
  double total = 0.0;
  t.for_each_edge([&](EdgeView e) {
    const double d = std::abs(t.degree(e.u) - t.degree(e.v));
    if (d > 0) total += std::pow(d, p);
  });
  return std::pow(total, 1.0 / p);
}

double largest_eigenvalue(const Tree& t, double tol, int max_iter) {
  if (!(tol > 0.0)) fail(ErrorCode::DomainViolation, "tolerance must be positive");
  const int n = t.vertex_count();
  if (n == 0) fail(ErrorCode::EmptyGraph, "eigenvalue of the empty graph");

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> ax(n, 0.0);
  double prev = 0.0;
  bool have_prev = false;

  for (int iter = 0; iter < max_iter; ++iter) {
    for (int v = 0; v < n; ++v) {
      double acc = 0.0;
      for (int w : t.neighbors(v)) acc += x[w];
      ax[v] = acc;
    }
    double rayleigh = 0.0;
    for (int v = 0; v < n; ++v) rayleigh += x[v] * ax[v];

    if (have_prev && std::abs(rayleigh - prev) < tol) return rayleigh;
    prev = rayleigh;
    have_prev = true;

    // next iterate of A+I, normalized
    double norm_sq = 0.0;
    for (int v = 0; v < n; ++v) {
      ax[v] += x[v];
      norm_sq += ax[v] * ax[v];
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (int v = 0; v < n; ++v) x[v] = ax[v] * inv;
  }
  fail(ErrorCode::NoConvergence,
       "power iteration did not converge in " + std::to_string(max_iter) + " iterations");
}

}  // namespace catindex

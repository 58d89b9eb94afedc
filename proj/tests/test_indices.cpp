#include <doctest.h>

#include <cmath>

#include "catindex/constructors.hpp"
#include "catindex/indices.hpp"
#include "test_util.hpp"

using namespace catindex;
using doctest::Approx;

namespace {

const Tree& p3() {
  static const Tree t = caterpillar(3, 0);
  return t;
}

// Independent recomputation over a dense adjacency matrix; a second data
// path for the edge- and pair-sum oracles.
double dense_index(const Tree& t, const IndexKind& kind) {
  const int n = t.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  t.for_each_edge([&](EdgeView e) { adj[e.u][e.v] = adj[e.v][e.u] = 1; });
  std::vector<double> deg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) deg[i] += adj[i][j];

  double total = 0.0;
  const bool pair_sum = kind.tag == IndexTag::TotalIrregularity || kind.tag == IndexTag::TotalSigma;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!pair_sum && !adj[i][j]) continue;
      const double a = deg[i], b = deg[j];
      switch (kind.tag) {
        case IndexTag::Albertson: total += std::abs(a - b); break;
        case IndexTag::TotalIrregularity: total += std::abs(a - b); break;
        case IndexTag::Sigma: total += (a - b) * (a - b); break;
        case IndexTag::TotalSigma: total += (a - b) * (a - b); break;
        case IndexTag::Sombor: total += std::sqrt(a * a + b * b); break;
        case IndexTag::ReducedSombor: total += std::sqrt((a - 1) * (a - 1) + (b - 1) * (b - 1)); break;
        case IndexTag::Randic: total += std::pow(a * b, kind.param); break;
        case IndexTag::SumConnectivity: total += std::pow(a + b, kind.param); break;
        case IndexTag::Harmonic: total += 2.0 / (a + b); break;
        default: FAIL("unsupported kind in dense oracle");
      }
    }
  }
  return total;
}

}  // namespace

TEST_CASE("frozen oracle values") {
  const Tree c33 = caterpillar(3, 3);
  CHECK(*compute(c33, IndexKind::albertson()).exact == 32);
  CHECK(*compute(c33, IndexKind::sigma()).exact == 104);
  CHECK(*compute(caterpillar(100, 3), IndexKind::sigma()).exact == 4760);
  CHECK(*compute(caterpillar(2, 0), IndexKind::albertson()).exact == 0);  // P2 is regular

  for (int n = 3; n <= 12; ++n)
    CHECK(*compute(star_graph(n), IndexKind::albertson()).exact ==
          static_cast<std::int64_t>(n - 1) * (n - 2));

  CHECK(*compute(p3(), IndexKind::total_sigma()).exact == 2);
  CHECK(*compute(caterpillar(4, 0), IndexKind::total_irregularity()).exact == 4);
  CHECK(compute(p3(), IndexKind::variance()).approx == Approx(2.0 / 9.0).epsilon(1e-12));

  CHECK(compute(c33, IndexKind::randic()).approx == Approx(4.788854381999832).epsilon(1e-12));
  CHECK(compute(p3(), IndexKind::sombor()).approx == Approx(4.472135954999579).epsilon(1e-12));
  CHECK(compute(p3(), IndexKind::reduced_sombor()).approx == Approx(2.0).epsilon(1e-12));
  CHECK(compute(c33, IndexKind::reduced_sombor()).approx == Approx(40.0).epsilon(1e-12));
  CHECK(compute(p3(), IndexKind::harmonic()).approx == Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(compute(p3(), IndexKind::sum_connectivity()).approx ==
        Approx(1.1547005383792515).epsilon(1e-12));
  CHECK(compute(c33, IndexKind::sum_connectivity()).approx ==
        Approx(4.574693111058003).epsilon(1e-12));
  CHECK(compute(c33, IndexKind::variance()).approx == Approx(2.138888888888889).epsilon(1e-12));

  SUBCASE("single vertex") {
    const Tree k1 = caterpillar(1, 0);
    CHECK(*compute(k1, IndexKind::albertson()).exact == 0);
    CHECK(compute(k1, IndexKind::variance()).approx == 0.0);
    CHECK(compute(k1, IndexKind::collatz_sinogowitz()).approx == Approx(0.0));
  }
}

TEST_CASE("general Albertson index") {
  const Tree c33 = caterpillar(3, 3);
  CHECK(general_albertson(c33, 1.0) == Approx(32.0).epsilon(1e-12));
  CHECK(general_albertson(c33, 2.0) == Approx(10.19803902718557).epsilon(1e-12));
  CHECK(general_albertson(p3(), 3.0) == Approx(1.2599210498948732).epsilon(1e-12));
  CHECK_THROWS_AS((void)general_albertson(c33, 0.0), Error);
  CHECK_THROWS_AS((void)general_albertson(c33, -1.0), Error);

  SUBCASE("p=1 and p=2 reduce to Albertson and sqrt(Sigma)") {
    for (const Tree& t : test::random_corpus(100, 40, 21)) {
      const double irr = compute(t, IndexKind::albertson()).approx;
      const double sigma = compute(t, IndexKind::sigma()).approx;
      CHECK(general_albertson(t, 1.0) == Approx(irr).epsilon(1e-9));
      const double g2 = general_albertson(t, 2.0);
      CHECK(g2 * g2 == Approx(sigma).epsilon(1e-9));
    }
  }
}

TEST_CASE("largest eigenvalue by power iteration") {
  CHECK(largest_eigenvalue(caterpillar(2, 0)) == Approx(1.0).epsilon(1e-8));
  CHECK(largest_eigenvalue(p3()) == Approx(std::sqrt(2.0)).epsilon(1e-8));
  CHECK(largest_eigenvalue(star_graph(5)) == Approx(2.0).epsilon(1e-8));
  CHECK(largest_eigenvalue(star_graph(10)) == Approx(3.0).epsilon(1e-8));
  CHECK(largest_eigenvalue(caterpillar(1, 0)) == Approx(0.0));

  CHECK_THROWS_AS((void)largest_eigenvalue(p3(), 1e-10, 1), Error);
  CHECK_THROWS_AS((void)largest_eigenvalue(p3(), 0.0), Error);

  SUBCASE("lambda_1 is at least the average degree") {
    for (const Tree& t : test::random_corpus(50, 30, 31)) {
      const double lam = largest_eigenvalue(t);
      CHECK(lam >= 2.0 * t.edge_count() / t.vertex_count() - 1e-9);
      CHECK(compute(t, IndexKind::collatz_sinogowitz()).approx >= -1e-9);
    }
  }
}

TEST_CASE("oracle agrees with a dense-matrix recomputation") {
  const std::vector<IndexKind> kinds = {
      IndexKind::albertson(),      IndexKind::sigma(),
      IndexKind::total_irregularity(), IndexKind::total_sigma(),
      IndexKind::sombor(),         IndexKind::reduced_sombor(),
      IndexKind::randic(-0.5),     IndexKind::randic(1.0),
      IndexKind::sum_connectivity(-0.5), IndexKind::harmonic(),
  };
  for (const Tree& t : test::random_corpus(50, 12, 41))
    for (const IndexKind& kind : kinds)
      CHECK(compute(t, kind).approx == Approx(dense_index(t, kind)).epsilon(1e-9));
}

TEST_CASE("real-valued indices are invariant under relabeling") {
  SplitMix64 rng(51);
  const std::vector<IndexKind> kinds = {
      IndexKind::variance(), IndexKind::sombor(),          IndexKind::randic(-0.5),
      IndexKind::harmonic(), IndexKind::sum_connectivity(-0.5),
      IndexKind::general_albertson(1.5),
  };
  for (const Tree& t : test::random_corpus(40, 30, 52)) {
    const Tree shuffled = test::relabel(t, test::random_permutation(t.vertex_count(), rng));
    for (const IndexKind& kind : kinds)
      CHECK(compute(t, kind).approx == Approx(compute(shuffled, kind).approx).epsilon(1e-12));
  }
}

TEST_CASE("integer kinds carry exact values; reals do not") {
  const Tree t = caterpillar(5, 2);
  CHECK(compute(t, IndexKind::albertson()).exact.has_value());
  CHECK(compute(t, IndexKind::total_sigma()).exact.has_value());
  CHECK_FALSE(compute(t, IndexKind::randic()).exact.has_value());
  const IndexValue v = compute(t, IndexKind::sigma());
  CHECK(v.approx == static_cast<double>(*v.exact));
}

TEST_CASE("checked arithmetic flags 64-bit overflow") {
  // star with 4e6 leaves: sigma = 4e6 * (4e6 - 1)^2 > 2^63
  const Tree big = star_graph(4000001);
  CHECK_THROWS_AS((void)compute(big, IndexKind::sigma()), Error);
  try {
    (void)compute(big, IndexKind::sigma());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Overflow);
  }
}

TEST_CASE("index spec parsing") {
  CHECK(parse_index_spec("albertson").tag == IndexTag::Albertson);
  CHECK(parse_index_spec("randic").param == -0.5);
  CHECK(parse_index_spec("randic:alpha=-1").param == -1.0);
  CHECK(parse_index_spec("general-albertson:p=3").param == 3.0);
  CHECK(parse_index_spec("sum-connectivity").tag == IndexTag::SumConnectivity);
  CHECK(parse_index_spec("collatz-sinogowitz").tag == IndexTag::CollatzSinogowitz);
  CHECK(parse_index_spec("randic:alpha=-0.5").name() == "randic:alpha=-0.5");

  CHECK_THROWS_AS((void)parse_index_spec("zagreb"), Error);
  CHECK_THROWS_AS((void)parse_index_spec("general-albertson"), Error);
  CHECK_THROWS_AS((void)parse_index_spec("general-albertson:p=0"), Error);
  CHECK_THROWS_AS((void)parse_index_spec("sigma:alpha=1"), Error);
  CHECK_THROWS_AS((void)parse_index_spec("randic:p=1"), Error);
  CHECK_THROWS_AS((void)parse_index_spec("randic:alpha=abc"), Error);
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "catindex/tree.hpp"

namespace catindex {

enum class IndexTag {
  Albertson,
  GeneralAlbertson,   // parameter p > 0
  TotalIrregularity,
  Sigma,
  TotalSigma,
  Variance,
  Sombor,
  ReducedSombor,
  Randic,             // parameter alpha, classic -1/2
  SumConnectivity,    // parameter alpha, classic -1/2
  Harmonic,
  CollatzSinogowitz,
};

// An index selector plus its real parameter where one exists. Albertson,
// TotalIrregularity, Sigma and TotalSigma are integer-valued on trees and
// computed in overflow-checked 64-bit arithmetic; everything else is real.
struct IndexKind {
  IndexTag tag;
  double param = 0.0;

  static IndexKind albertson() { return {IndexTag::Albertson}; }
  static IndexKind general_albertson(double p);
  static IndexKind total_irregularity() { return {IndexTag::TotalIrregularity}; }
  static IndexKind sigma() { return {IndexTag::Sigma}; }
  static IndexKind total_sigma() { return {IndexTag::TotalSigma}; }
  static IndexKind variance() { return {IndexTag::Variance}; }
  static IndexKind sombor() { return {IndexTag::Sombor}; }
  static IndexKind reduced_sombor() { return {IndexTag::ReducedSombor}; }
  static IndexKind randic(double alpha = -0.5);
  static IndexKind sum_connectivity(double alpha = -0.5);
  static IndexKind harmonic() { return {IndexTag::Harmonic}; }
  static IndexKind collatz_sinogowitz() { return {IndexTag::CollatzSinogowitz}; }

  bool integer_valued() const {
    return tag == IndexTag::Albertson || tag == IndexTag::TotalIrregularity ||
           tag == IndexTag::Sigma || tag == IndexTag::TotalSigma;
  }

  std::string name() const;  // CLI spelling, e.g. "randic:alpha=-0.5"
};

// "albertson", "sigma", "randic", "randic:alpha=-1", "general-albertson:p=3", ...
IndexKind parse_index_spec(const std::string& spec);

struct IndexValue {
  std::optional<std::int64_t> exact;  // present iff the kind is integer-valued
  double approx = 0.0;
};

// Brute-force oracle: edge-sum indices walk every edge, pair-sum indices
// (TotalIrregularity, TotalSigma) walk every unordered vertex pair.
IndexValue compute(const Tree& t, const IndexKind& kind);

// (sum over edges of |d(u)-d(v)|^p)^(1/p), p > 0.
double general_albertson(const Tree& t, double p);

// Largest adjacency eigenvalue by power iteration from the all-ones vector.
// Iterates on A+I so the Perron root strictly dominates (pure A oscillates
// between +/-lambda_1 on bipartite graphs); the reported value is the
// Rayleigh quotient of A. Converges when successive quotients differ by
// less than tol; throws NoConvergence after max_iter.
double largest_eigenvalue(const Tree& t, double tol = 1e-10, int max_iter = 100000);

}  // namespace catindex

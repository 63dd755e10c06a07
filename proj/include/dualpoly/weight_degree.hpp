#pragma once

#include <string>
#include <vector>

#include "dualpoly/approx_lab.hpp"
#include "dualpoly/boolcube.hpp"

namespace dualpoly {

struct WeightDegreeReport {
  int degree = -1;
  Rational weight;
  /// Certified max |p - f| over the whole cube.
  Rational error;
  /// n t log^2(n) / d, with t = log(1/target)/log(n) for EQ_y and t = k_f
  /// for symmetric f.
  double bound_exponent = 0;
  /// The variant with one fewer log factor.
  double bound_exponent_improved = 0;
  /// Number of blocks l of the split AND_l o AND_{n/l} (n for a single block
  /// of agreement counts).
  int blocks = 0;
  int outer_degree = -1;
  /// "union-bound" or "joint-lp".
  std::string route;
  /// Best outer error per examined block count, for diagnostics.
  std::vector<std::pair<int, Rational>> candidates;
};

/// Symmetric f with D_f given per weight (entries 0 or 1).
struct SymmetricSpec {
  int n = 0;
  std::vector<int> predicate;
  int k_f = 0;

  /// Computes k_f; throws std::invalid_argument unless entries are 0/1.
  static SymmetricSpec from_predicate(std::vector<int> predicate);
  std::vector<Rational> values() const;
};

/// Smallest i with D_f constant on weights [i + 1, n - i - 1].
int compute_k_f(const std::vector<int>& predicate);

/// Low-weight approximation of EQ_y on n <= 16 bits of degree at most
/// degree_budget and error at most error_target, from the composition of an
/// LP-optimal outer AND_l polynomial with exact inner AND_{n/l} blocks. The
/// block count l ranges over the divisors of n; the lightest certified
/// candidate is returned. Throws CertificationError when no split reaches
/// the target (the message lists the best error per l).
std::pair<ParityPoly, WeightDegreeReport> approx_eq_y(int n, const CubePoint& y, int degree_budget,
                                                      const Rational& error_target);

/// Low-weight degree-K approximation of a symmetric f to error eps on n <= 16
/// bits, summing EQ_y approximants over the minority side of f.
std::pair<ParityPoly, WeightDegreeReport> symub_construct(const SymmetricSpec& spec, int K, const Rational& eps);

struct WeightLowerBound {
  bool unbounded = false;
  /// max_{|S| <= K} |<psi, chi_S>|.
  Rational max_correlation;
  Rational bound;
};

/// Any degree-K p with |p - f| <= target has weight at least
/// (cert.epsilon - target) / max_{|S| <= K} |<psi, chi_S>|.
WeightLowerBound weight_lower_bound(const LPDualCertificate& cert, int K, const Rational& target);

}  // namespace dualpoly

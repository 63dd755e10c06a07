#pragma once

#include <optional>
#include <vector>

#include "dualpoly/boolcube.hpp"
#include "dualpoly/ratpoly.hpp"

namespace dualpoly {

/// Discrete Chebyshev approximation of values[i] at points[i] by a
/// polynomial of degree <= degree. When grid_n > 0 the points are the weight
/// grid t_h = 1 - 2h/grid_n (h = 0..grid_n) and the dual certificate is
/// lifted to a symmetric witness on {0,1}^grid_n.
struct MinimaxInstance {
  std::vector<Rational> points;
  std::vector<Rational> values;
  int degree = 0;
  int grid_n = 0;

  static MinimaxInstance on_weights(int n, std::vector<Rational> values_by_weight, int degree);
  /// Throws std::invalid_argument on size mismatch, repeated points or a
  /// negative degree.
  void validate() const;
};

struct LPDualCertificate {
  /// Signed masses on the points: sum |psi_i| = 1 when epsilon > 0, zero
  /// pairing with t^j for j <= degree, sum psi_i f_i = epsilon.
  std::vector<Rational> point_masses;
  /// Symmetric witness (per-string values) when the instance is a weight grid.
  std::optional<DualWitness> witness;
  Rational epsilon;
  int degree = 0;
};

struct MinimaxResult {
  RationalPoly poly;
  Rational epsilon;
  LPDualCertificate certificate;
};

/// Exact simplex solution; throws CertificationError if the strong-duality
/// or complementary-slackness audit fails.
MinimaxResult minimax_lp(const MinimaxInstance& inst);

/// Least k with minimax error <= epsilon for the symmetric function with
/// the given values on weights 0..n.
int approx_degree(const std::vector<Rational>& f_by_weight, const Rational& epsilon);

/// Minimax error over the whole cube {0,1}^n (n <= 8) using every parity of
/// degree <= k; used to audit that symmetrization loses nothing.
Rational cube_minimax_error(int n, const std::vector<Rational>& cube_values, int k);

/// Symmetric Boolean functions over {0,1}^n given per weight.
std::vector<Rational> and_by_weight(int n);
std::vector<Rational> or_by_weight(int n);
std::vector<Rational> maj_by_weight(int n);
std::vector<Rational> parity_by_weight(int n);
std::vector<Rational> exact_by_weight(int n, int h);

/// mu = 2 psi^+, nu = 2 psi^-. Throws std::invalid_argument when the
/// certificate has no symmetric witness, L1 norm != 1, or nonzero total mass.
std::pair<SymmetricDistribution, SymmetricDistribution> dual_distributions(const LPDualCertificate& cert);

struct RampAdvantage {
  /// 2^{-4K+3} sum_{d>k} C(2K, K+d)^2.
  Rational radicand;
  double value = 0;
  /// The 2^{-4K+1} variant.
  Rational proof_radicand;
  double proof_value = 0;
};
/// Requires 0 <= k < K.
RampAdvantage ramp_advantage(int k, int K);

/// sum_{d>k} 2 (2^{-2K} C(2K, K+d))^2; zero when k >= K.
Rational l2_tail_bound(int K, int k);

/// 2^{-K} (t + 1)^K.
RationalPoly p0_infinity(int K);

/// E_{t ~ sigma}[(p - q)^2], exactly.
Rational sigma_l2_error(const RationalPoly& p, const RationalPoly& q);

/// m Chebyshev nodes cos(pi (i + 1/2) / m) rounded to multiples of 2^-16,
/// plus the endpoints -1 and 1, sorted and deduplicated.
std::vector<Rational> chebyshev_grid(int m);

struct FiniteRamp {
  SymmetricDistribution mu;
  SymmetricDistribution nu;
  /// E_mu[AND of K bits] - E_nu[AND of K bits].
  Rational advantage;
  /// ramp_advantage(k, K).value, for comparison only.
  double limit_value = 0;
  bool kwise = false;
  MinimaxResult lp;
};
/// Requires 0 <= k < K <= n.
FiniteRamp finite_n_ramp(int k, int K, int n);

/// Number of all-ones blocks of size t, for symmetric input over t*n bits.
SymmetricDistribution consolidate_and(const SymmetricDistribution& d, int t);

/// 2 mainupper_bound(k, t K) n^K. Requires 1 <= K <= n/64.
double consolidation_bound(int k, int K, int t, int n);

}  // namespace dualpoly

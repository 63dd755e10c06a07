#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dualpoly/boolcube.hpp"
#include "dualpoly/ratpoly.hpp"
#include "dualpoly/roots.hpp"

namespace dualpoly {

/// t = 1 - 2h/n.
Rational weight_to_t(int n, int h);

/// Univariate P(t) with P(1 - 2h/n) = E_{|x| = h} f(x), f given on {0,1}^n
/// masks. Throws std::invalid_argument for n > 24.
RationalPoly symmetrize(int n, const std::function<Rational(std::uint32_t)>& f);
RationalPoly symmetrize(const ParityPoly& p);
/// Interpolates a function given by its values on weights 0..n.
RationalPoly symmetrize_weights(int n, const std::vector<Rational>& by_weight);

/// C(K, w) C(n - K, h - w) / C(n, h).
Rational hypergeometric(int n, int K, int w, int h);

/// Symmetrization of the indicator that the first K bits have weight w.
struct SymmetrizedTest {
  int n = 0;
  int K = 0;
  int w = 0;
  Rational c_w;
  std::vector<Rational> zeros_minus;
  std::vector<Rational> zeros_plus;
  RationalPoly poly;

  std::vector<Rational> zeros() const;
};

/// Throws std::invalid_argument unless 0 <= w <= K <= n, and
/// CertificationError if the product form misses a grid value.
SymmetrizedTest build_pw(int n, int K, int w);

struct ReflectionCheck {
  /// p_w(t) == p_{K-w}(-t).
  bool negation = false;
  /// p_w(t) == p_{K-w}(1 - t).
  bool unit_shift = false;
};
ReflectionCheck pw_reflection_check(const SymmetrizedTest& test);

struct BoundedReport {
  bool hypothesis = false;  // n >= 64K
  double grid_max = 0;
  Rational certified_lower;
  Rational certified_upper;
  bool holds = false;  // certified_upper <= 2
};
BoundedReport bounded_check(const SymmetrizedTest& test, int grid_size = 1000);

/// 4 sqrt(K) exp(-k^2 / 1156 K).
double main3_bound(int k, int K);

struct QwApproximation {
  RationalPoly q;
  ChebyshevExpansion expansion;
  double errbound = 0;
  /// Certified enclosure of max_{[-1,1]} |p_w - q_w|.
  Rational err_lower;
  Rational err_upper;
  /// 2 sum_{d >= k} |c_d|.
  Rational tail_sum;
  bool hypothesis = false;
  bool holds = false;  // err_upper <= errbound and err_upper <= tail_sum
};
QwApproximation approx_qw(const SymmetrizedTest& test, int k);

struct HDeltaParams {
  Rational epsilon;
  Rational delta;
  std::vector<double> thetas;

  /// delta = eps^2 / (2 (1 + eps)); `samples` equally spaced angles in [-pi, pi).
  static HDeltaParams make(const Rational& epsilon, int samples);
};

/// h_delta(s, z) = (s - z)^2 + delta (1 - z^2).
double h_delta(double delta, double s, double z);

/// g(s) = C_w prod_z (s^2 - 2 s z + 1)/2; its s^{K+d} coefficient is c_d.
RationalPoly g_polynomial(const SymmetrizedTest& test);

/// max over the theta grid of |lhs - rhs| / max(1, |rhs|), comparing
/// |g((1+eps) e^{i theta})|^2 with the product form.
double normg_identity_check(const SymmetrizedTest& test, const HDeltaParams& params);

struct FupperReport {
  /// First branch with p_w(|s|)^2, second branch as stated.
  bool holds = false;
  /// First branch with p_w(s)^2 taken literally.
  bool literal_holds = false;
  double worst_ratio = 0;
};
FupperReport fupper_property_check(const SymmetrizedTest& test, const Rational& delta, const std::vector<double>& grid);

/// (K + 1) * 8 sqrt(K) exp(-k^2 / 1156 K). Requires k >= 1 and K >= 1.
double mainupper_bound(int k, int K);

struct DecayReport {
  double amplified_sum = 0;
  double bound = 0;
  bool holds = false;
};
/// sum_{d=-K}^{K} (1+eps)^{2(K+d)} c_d^2 against 4 (1+eps)^{2K} (1+delta)^{2K} e^{130 delta K}.
DecayReport coefficient_decay_check(const SymmetrizedTest& test, const Rational& epsilon);

}  // namespace dualpoly

#include "dualpoly/symcheb.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace dualpoly {

Rational weight_to_t(int n, int h) {
  Rational t(n - 2 * h, n);
  t.canonicalize();
  return t;
}

RationalPoly symmetrize_weights(int n, const std::vector<Rational>& by_weight) {
  if (n < 1 || by_weight.size() != static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("symmetrize: need n+1 weight values");
  std::vector<Rational> ts(n + 1);
  for (int h = 0; h <= n; ++h) ts[h] = weight_to_t(n, h);
  return interpolate(ts, by_weight);
}

RationalPoly symmetrize(int n, const std::function<Rational(std::uint32_t)>& f) {
  if (n < 1 || n > kMaxCubeBits) throw std::invalid_argument("symmetrize: n must lie in [1, 24]");
  std::vector<Rational> sums(n + 1);
  const std::uint32_t size = std::uint32_t{1} << n;
  for (std::uint32_t x = 0; x < size; ++x) sums[std::popcount(x)] += f(x);
  for (int h = 0; h <= n; ++h) sums[h] /= Rational(binomial(n, h));
  return symmetrize_weights(n, sums);
}

RationalPoly symmetrize(const ParityPoly& p) {
  const int n = p.n();
  std::vector<Rational> avg(n + 1);
  for (const auto& [s, c] : p.coeffs()) {
    const int j = std::popcount(s);
    for (int h = 0; h <= n; ++h) avg[h] += c * ratio(character_sum(n, j, h), binomial(n, h));
  }
  return symmetrize_weights(n, avg);
}

Rational hypergeometric(int n, int K, int w, int h) {
  Rational v(binomial(K, w) * binomial(n - K, h - w), binomial(n, h));
  v.canonicalize();
  return v;
}

std::vector<Rational> SymmetrizedTest::zeros() const {
  std::vector<Rational> z = zeros_minus;
  z.insert(z.end(), zeros_plus.begin(), zeros_plus.end());
  return z;
}

SymmetrizedTest build_pw(int n, int K, int w) {
  if (w < 0 || K < w || n < K || n < 1) throw std::invalid_argument("build_pw: need 0 <= w <= K <= n");
  SymmetrizedTest test{n, K, w, 0, {}, {}, {}};
  for (int h = 0; h < K - w; ++h) test.zeros_minus.push_back(-weight_to_t(n, h));
  for (int h = 0; h < w; ++h) test.zeros_plus.push_back(weight_to_t(n, h));
  const auto zs = test.zeros();
  const RationalPoly monic = poly_from_roots(zs, 1);
  // Weight h = w always has positive probability C(n-K, 0) C(K, w) / C(n, w).
  test.c_w = hypergeometric(n, K, w, w) / monic(weight_to_t(n, w));
  test.poly = monic * test.c_w;
  for (int h = 0; h <= n; ++h) {
    if (test.poly(weight_to_t(n, h)) != hypergeometric(n, K, w, h)) {
      throw CertificationError("product form of p_w", "n=" + std::to_string(n) + " K=" + std::to_string(K) +
                                                          " w=" + std::to_string(w) + " h=" + std::to_string(h));
    }
  }
  return test;
}

ReflectionCheck pw_reflection_check(const SymmetrizedTest& test) {
  const SymmetrizedTest mirror = build_pw(test.n, test.K, test.K - test.w);
  return {test.poly == mirror.poly.compose_affine(-1, 0), test.poly == mirror.poly.compose_affine(-1, 1)};
}

BoundedReport bounded_check(const SymmetrizedTest& test, int grid_size) {
  BoundedReport r;
  r.hypothesis = test.n >= 64 * test.K;
  for (int i = 0; i <= grid_size; ++i) {
    const double t = -1.0 + 2.0 * i / grid_size;
    r.grid_max = std::max(r.grid_max, std::abs(test.poly.eval_double(t)));
  }
  const auto cert = certified_sup_norm(test.poly, -1, 1);
  r.certified_lower = cert.lower;
  r.certified_upper = cert.upper;
  r.holds = cert.upper <= 2;
  return r;
}

double main3_bound(int k, int K) {
  return 4.0 * std::sqrt(static_cast<double>(K)) * std::exp(-static_cast<double>(k) * k / (1156.0 * K));
}

QwApproximation approx_qw(const SymmetrizedTest& test, int k) {
  if (k < 0) throw std::invalid_argument("approx_qw: k must be nonnegative");
  QwApproximation out;
  out.hypothesis = test.n >= 64 * test.K;
  out.expansion = cheb_transform(test.poly);
  out.q = cheb_truncate(out.expansion, k);
  out.errbound = main3_bound(k, test.K);
  for (int d = k; d <= out.expansion.degree(); ++d) out.tail_sum += abs(out.expansion.coeff(d));
  out.tail_sum *= 2;
  if (k == 0) out.tail_sum -= abs(out.expansion.coeff(0));  // c_0 is counted once
  const auto cert = certified_sup_norm(test.poly - out.q, -1, 1);
  out.err_lower = cert.lower;
  out.err_upper = cert.upper;
  out.holds = to_double(cert.upper) <= out.errbound && cert.lower <= out.tail_sum;
  return out;
}

HDeltaParams HDeltaParams::make(const Rational& epsilon, int samples) {
  if (epsilon < 0) throw std::invalid_argument("epsilon must be nonnegative");
  if (samples < 1) throw std::invalid_argument("need at least one theta sample");
  HDeltaParams p;
  p.epsilon = epsilon;
  p.delta = epsilon * epsilon / (2 * (1 + epsilon));
  for (int i = 0; i < samples; ++i) p.thetas.push_back(-std::numbers::pi + 2 * std::numbers::pi * i / samples);
  return p;
}

double h_delta(double delta, double s, double z) { return (s - z) * (s - z) + delta * (1 - z * z); }

RationalPoly g_polynomial(const SymmetrizedTest& test) {
  RationalPoly g = RationalPoly::constant(test.c_w);
  for (const auto& z : test.zeros()) g *= RationalPoly({Rational(1, 2), -z, Rational(1, 2)});
  return g;
}

double normg_identity_check(const SymmetrizedTest& test, const HDeltaParams& params) {
  const RationalPoly g = g_polynomial(test);
  const double eps = to_double(params.epsilon);
  const double delta = to_double(params.delta);
  // (1 + delta)^2 h_{delta'}(s, z) with delta' = delta (2 + delta) / (1 + delta)^2.
  const Rational one_d = 1 + params.delta;
  const double delta_eff = to_double(params.delta * (2 + params.delta) / (one_d * one_d));
  const double cw = to_double(test.c_w);
  const double K = test.K;
  std::vector<double> zs;
  for (const auto& z : test.zeros()) zs.push_back(to_double(z));
  double worst = 0;
  for (double theta : params.thetas) {
    const double lhs = std::norm(g.eval_complex(std::polar(1 + eps, theta)));
    double rhs = std::pow(1 + eps, 2 * K) * std::pow(1 + delta, 2 * K) * cw * cw;
    const double s = std::cos(theta) / (1 + delta);
    for (double z : zs) rhs *= h_delta(delta_eff, s, z);
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  return worst;
}

FupperReport fupper_property_check(const SymmetrizedTest& test, const Rational& delta, const std::vector<double>& grid) {
  FupperReport r{true, true, 0};
  const double d = to_double(delta);
  const double cap = std::exp(65 * d * test.K);
  const double cw2 = to_double(test.c_w * test.c_w);
  const double edge = 1 - static_cast<double>(test.w) / (16.0 * test.K);
  std::vector<double> zs;
  for (const auto& z : test.zeros()) zs.push_back(to_double(z));
  auto within = [](double lhs, double rhs) { return lhs <= rhs * (1 + 1e-9) + 1e-12; };
  for (double s : grid) {
    double lhs = cw2;
    for (double z : zs) lhs *= h_delta(d, s, z);
    if (std::abs(s) <= edge) {
      const double pabs = test.poly.eval_double(std::abs(s));
      const double plit = test.poly.eval_double(s);
      const double rhs = cap * pabs * pabs;
      if (!within(lhs, rhs)) r.holds = false;
      if (!within(lhs, cap * plit * plit)) r.literal_holds = false;
      if (rhs > 0) r.worst_ratio = std::max(r.worst_ratio, lhs / rhs);
    } else {
      if (!within(lhs, cap)) {
        r.holds = false;
        r.literal_holds = false;
      }
      r.worst_ratio = std::max(r.worst_ratio, lhs / cap);
    }
  }
  return r;
}

double mainupper_bound(int k, int K) {
  if (k < 1 || K < 1) throw std::invalid_argument("mainupper_bound: need k >= 1 and K >= 1");
  return (K + 1) * 8.0 * std::sqrt(static_cast<double>(K)) * std::exp(-static_cast<double>(k) * k / (1156.0 * K));
}

DecayReport coefficient_decay_check(const SymmetrizedTest& test, const Rational& epsilon) {
  const auto e = cheb_transform(test.poly);
  const double eps = to_double(epsilon);
  const double delta = to_double(epsilon * epsilon / (2 * (1 + epsilon)));
  const int K = test.K;
  DecayReport r;
  for (int d = -K; d <= K; ++d) {
    const double c = to_double(e.coeff(d));
    r.amplified_sum += std::pow(1 + eps, 2 * (K + d)) * c * c;
  }
  r.bound = 4 * std::pow(1 + eps, 2 * K) * std::pow(1 + delta, 2 * K) * std::exp(130 * delta * K);
  r.holds = r.amplified_sum <= r.bound;
  return r;
}

}  // namespace dualpoly

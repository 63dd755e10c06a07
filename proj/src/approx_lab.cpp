#include "dualpoly/approx_lab.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "dualpoly/simplex.hpp"
#include "dualpoly/symcheb.hpp"

namespace dualpoly {

MinimaxInstance MinimaxInstance::on_weights(int n, std::vector<Rational> values_by_weight, int degree) {
  MinimaxInstance inst;
  for (int h = 0; h <= n; ++h) inst.points.push_back(weight_to_t(n, h));
  inst.values = std::move(values_by_weight);
  inst.degree = degree;
  inst.grid_n = n;
  return inst;
}

void MinimaxInstance::validate() const {
  if (points.empty() || points.size() != values.size())
    throw std::invalid_argument("minimax instance needs one value per point");
  if (degree < 0) throw std::invalid_argument("minimax degree must be nonnegative");
  std::set<Rational> seen(points.begin(), points.end());
  if (seen.size() != points.size()) throw std::invalid_argument("minimax points must be distinct");
  if (grid_n > 0 && points.size() != static_cast<std::size_t>(grid_n + 1))
    throw std::invalid_argument("weight-grid instance needs n+1 points");
}

MinimaxResult minimax_lp(const MinimaxInstance& inst) {
  inst.validate();
  const std::size_t m = inst.points.size();
  const int k = inst.degree;
  std::vector<std::vector<Rational>> basis(m, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < m; ++i) {
    Rational p = 1;
    for (int j = 0; j <= k; ++j) {
      basis[i][j] = p;
      p *= inst.points[i];
    }
  }
  const DiscreteMinimax dm = solve_discrete_minimax(basis, inst.values);

  MinimaxResult out;
  out.poly = RationalPoly(dm.coeffs);
  out.epsilon = dm.error;
  out.certificate.point_masses = dm.dual_masses;
  out.certificate.epsilon = dm.error;
  out.certificate.degree = k;

  // Audit the certificate independently of the solver.
  Rational l1 = 0, corr = 0;
  for (std::size_t i = 0; i < m; ++i) {
    l1 += abs(dm.dual_masses[i]);
    corr += dm.dual_masses[i] * inst.values[i];
  }
  if (corr != out.epsilon) throw CertificationError("dual certificate correlation", "eps=" + to_string(out.epsilon));
  if (out.epsilon > 0 && l1 != 1) throw CertificationError("dual certificate normalization", "l1=" + to_string(l1));
  for (int j = 0; j <= k; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += dm.dual_masses[i] * basis[i][j];
    if (s != 0) throw CertificationError("dual certificate pure high degree", "t^" + std::to_string(j));
  }

  if (inst.grid_n > 0) {
    DualWitness psi;
    psi.n = inst.grid_n;
    psi.representation = DualWitness::Representation::Symmetric;
    psi.claimed_degree = k + 1;
    psi.values.resize(inst.grid_n + 1);
    for (int h = 0; h <= inst.grid_n; ++h) psi.values[h] = dm.dual_masses[h] / Rational(binomial(inst.grid_n, h));
    out.certificate.witness = std::move(psi);
  }
  return out;
}

int approx_degree(const std::vector<Rational>& f_by_weight, const Rational& epsilon) {
  const int n = static_cast<int>(f_by_weight.size()) - 1;
  if (n < 1) throw std::invalid_argument("approx_degree: need n >= 1");
  if (epsilon < 0) throw std::invalid_argument("approx_degree: epsilon must be nonnegative");
  for (int k = 0; k < n; ++k) {
    if (minimax_lp(MinimaxInstance::on_weights(n, f_by_weight, k)).epsilon <= epsilon) return k;
  }
  return n;
}

Rational cube_minimax_error(int n, const std::vector<Rational>& cube_values, int k) {
  if (n < 1 || n > 8) throw std::invalid_argument("cube_minimax_error: n must lie in [1, 8]");
  const std::uint32_t size = std::uint32_t{1} << n;
  if (cube_values.size() != size) throw std::invalid_argument("cube_minimax_error: need 2^n values");
  std::vector<std::uint32_t> sets;
  for (std::uint32_t s = 0; s < size; ++s)
    if (std::popcount(s) <= k) sets.push_back(s);
  std::vector<std::vector<Rational>> basis(size, std::vector<Rational>(sets.size()));
  for (std::uint32_t x = 0; x < size; ++x)
    for (std::size_t j = 0; j < sets.size(); ++j) basis[x][j] = character(sets[j], x);
  return solve_discrete_minimax(basis, cube_values).error;
}

namespace {

std::vector<Rational> by_predicate(int n, auto pred) {
  std::vector<Rational> v(n + 1);
  for (int h = 0; h <= n; ++h) v[h] = pred(h) ? 1 : 0;
  return v;
}

}  // namespace

std::vector<Rational> and_by_weight(int n) { return by_predicate(n, [n](int h) { return h == n; }); }
std::vector<Rational> or_by_weight(int n) { return by_predicate(n, [](int h) { return h > 0; }); }
std::vector<Rational> maj_by_weight(int n) { return by_predicate(n, [n](int h) { return 2 * h > n; }); }
std::vector<Rational> parity_by_weight(int n) { return by_predicate(n, [](int h) { return h % 2 == 1; }); }
std::vector<Rational> exact_by_weight(int n, int e) { return by_predicate(n, [e](int h) { return h == e; }); }

std::pair<SymmetricDistribution, SymmetricDistribution> dual_distributions(const LPDualCertificate& cert) {
  if (!cert.witness) throw std::invalid_argument("dual_distributions: certificate has no symmetric witness");
  const int n = cert.witness->n;
  Rational total = 0, l1 = 0;
  for (const auto& m : cert.point_masses) {
    total += m;
    l1 += abs(m);
  }
  if (total != 0) throw std::invalid_argument("dual_distributions: witness has nonzero pairing with the constant");
  if (l1 != 1) throw std::invalid_argument("dual_distributions: witness L1 norm is " + to_string(l1));
  SymmetricDistribution mu{n, std::vector<Rational>(n + 1)};
  SymmetricDistribution nu{n, std::vector<Rational>(n + 1)};
  for (int h = 0; h <= n; ++h) {
    const Rational& m = cert.point_masses[h];
    if (m > 0) mu.weight_probs[h] = 2 * m;
    if (m < 0) nu.weight_probs[h] = -2 * m;
  }
  mu.validate();
  nu.validate();
  return {mu, nu};
}

RampAdvantage ramp_advantage(int k, int K) {
  if (k < 0 || k >= K) throw std::invalid_argument("ramp_advantage: need 0 <= k < K");
  Integer sum = 0;
  for (int d = k + 1; d <= K; ++d) {
    const Integer b = binomial(2 * K, K + d);
    sum += b * b;
  }
  RampAdvantage r;
  r.radicand = pow2(-4L * K + 3) * Rational(sum);
  r.proof_radicand = pow2(-4L * K + 1) * Rational(sum);
  r.value = std::sqrt(to_double(r.radicand));
  r.proof_value = std::sqrt(to_double(r.proof_radicand));
  return r;
}

Rational l2_tail_bound(int K, int k) {
  Rational s = 0;
  for (int d = k + 1; d <= K; ++d) {
    const Rational c = pow2(-2L * K) * Rational(binomial(2 * K, K + d));
    s += 2 * c * c;
  }
  return s;
}

RationalPoly p0_infinity(int K) {
  std::vector<Rational> roots(K, Rational(-1));
  return poly_from_roots(roots, pow2(-K));
}

Rational sigma_l2_error(const RationalPoly& p, const RationalPoly& q) {
  const auto e = cheb_transform(p - q);
  return sigma_inner(e, e);
}

std::vector<Rational> chebyshev_grid(int m) {
  if (m < 1) throw std::invalid_argument("chebyshev_grid: need m >= 1");
  std::set<Rational> nodes{Rational(-1), Rational(1)};
  for (int i = 0; i < m; ++i) {
    const double c = std::cos(std::numbers::pi * (i + 0.5) / m);
    Rational r(static_cast<long>(std::lround(c * 65536)), 65536);
    r.canonicalize();
    nodes.insert(r);
  }
  return {nodes.begin(), nodes.end()};
}

FiniteRamp finite_n_ramp(int k, int K, int n) {
  if (k < 0 || k >= K || K > n) throw std::invalid_argument("finite_n_ramp: need 0 <= k < K <= n");
  std::vector<Rational> nor(n + 1);
  for (int h = 0; h <= n; ++h) nor[h] = hypergeometric(n, K, 0, h);

  FiniteRamp out;
  out.lp = minimax_lp(MinimaxInstance::on_weights(n, nor, k));
  auto [mu0, nu0] = dual_distributions(out.lp.certificate);
  // Complementing every bit turns the all-zeros test into the all-ones test.
  out.mu = {n, std::vector<Rational>(mu0.weight_probs.rbegin(), mu0.weight_probs.rend())};
  out.nu = {n, std::vector<Rational>(nu0.weight_probs.rbegin(), nu0.weight_probs.rend())};
  for (int h = 0; h <= n; ++h)
    out.advantage += (out.mu.weight_probs[h] - out.nu.weight_probs[h]) * hypergeometric(n, K, K, h);
  if (out.advantage != 2 * out.lp.epsilon)
    throw CertificationError("ramp advantage equals twice the LP error", "n=" + std::to_string(n));
  out.limit_value = ramp_advantage(k, K).value;
  out.kwise = kwise_indistinguishable(out.mu, out.nu, k);
  return out;
}

SymmetricDistribution consolidate_and(const SymmetricDistribution& d, int t) {
  if (t < 1 || d.n % t != 0) throw std::invalid_argument("consolidate_and: n must be divisible by t");
  const int n = d.n / t;
  const int total_bits = d.n;
  // ways[j][f]: placements of j ones over the blocks seen so far with f full blocks.
  std::vector<std::vector<Integer>> ways(total_bits + 1, std::vector<Integer>(n + 1));
  ways[0][0] = 1;
  for (int b = 0; b < n; ++b) {
    std::vector<std::vector<Integer>> next(total_bits + 1, std::vector<Integer>(n + 1));
    for (int j = 0; j <= b * t; ++j) {
      for (int f = 0; f <= b; ++f) {
        if (ways[j][f] == 0) continue;
        for (int a = 0; a <= t; ++a) next[j + a][f + (a == t ? 1 : 0)] += ways[j][f] * binomial(t, a);
      }
    }
    ways = std::move(next);
  }
  SymmetricDistribution out{n, std::vector<Rational>(n + 1)};
  for (int h = 0; h <= total_bits; ++h) {
    if (d.weight_probs[h] == 0) continue;
    const Rational scale = d.weight_probs[h] / Rational(binomial(total_bits, h));
    for (int f = 0; f <= n; ++f)
      if (ways[h][f] != 0) out.weight_probs[f] += scale * Rational(ways[h][f]);
  }
  return out;
}

double consolidation_bound(int k, int K, int t, int n) {
  if (K < 1 || 64 * K > n) throw std::invalid_argument("consolidation_bound: need 1 <= K <= n/64");
  if (t < 1) throw std::invalid_argument("consolidation_bound: need t >= 1");
  return 2 * mainupper_bound(k, t * K) * std::pow(static_cast<double>(n), K);
}

}  // namespace dualpoly

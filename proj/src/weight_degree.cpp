#include "dualpoly/weight_degree.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "dualpoly/simplex.hpp"
#include "dualpoly/symcheb.hpp"

namespace dualpoly {

namespace {

constexpr int kMaxWeightBits = 16;

// Outer AND_l polynomial of least degree <= max_degree meeting the target.
struct OuterFit {
  int blocks = 0;
  int degree = -1;
  RationalPoly poly;
  Rational error;
  bool feasible = false;
};

OuterFit fit_outer(int blocks, int max_degree, const Rational& target) {
  OuterFit fit;
  fit.blocks = blocks;
  const auto values = and_by_weight(blocks);
  const int top = std::min(max_degree, blocks);
  for (int D = 0; D <= top; ++D) {
    const MinimaxResult r = minimax_lp(MinimaxInstance::on_weights(blocks, values, D));
    fit.degree = D;
    fit.poly = r.poly;
    fit.error = r.epsilon;
    if (r.epsilon <= target) {
      fit.feasible = true;
      break;
    }
  }
  return fit;
}

// Integer numerators of the parity coefficients of A(x) = P(t(m(x))), where
// m(x) counts all-ones blocks of consecutive bits; coefficient = hat[S] / den.
struct ComposedSpectrum {
  std::vector<Integer> hat;
  Integer den;
};

ComposedSpectrum composed_spectrum(int n, const OuterFit& fit) {
  const int l = fit.blocks;
  const int b = n / l;
  std::vector<Rational> outer(l + 1);
  Integer lcm = 1;
  for (int m = 0; m <= l; ++m) {
    outer[m] = fit.poly(weight_to_t(l, m));
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), outer[m].get_den_mpz_t());
  }
  std::vector<Integer> scaled(l + 1);
  for (int m = 0; m <= l; ++m) scaled[m] = outer[m].get_num() * (lcm / outer[m].get_den());

  const std::uint32_t size = std::uint32_t{1} << n;
  const std::uint32_t block_mask = (b >= 32) ? ~0u : ((std::uint32_t{1} << b) - 1);
  ComposedSpectrum out;
  out.hat.resize(size);
  for (std::uint32_t x = 0; x < size; ++x) {
    int full = 0;
    for (int blk = 0; blk < l; ++blk)
      if (((x >> (blk * b)) & block_mask) == block_mask) ++full;
    out.hat[x] = scaled[full];
  }
  walsh_hadamard_inplace(out.hat);
  out.den = lcm << n;
  return out;
}

void require_small(int n) {
  if (n < 1 || n > kMaxWeightBits) throw std::invalid_argument("n must lie in [1, 16]");
}

Rational max_error(const std::vector<Rational>& values, const std::function<Rational(std::uint32_t)>& target) {
  Rational worst = 0;
  for (std::size_t x = 0; x < values.size(); ++x) {
    const Rational gap = abs(Rational(values[x] - target(static_cast<std::uint32_t>(x))));
    if (gap > worst) worst = gap;
  }
  return worst;
}

}  // namespace

int compute_k_f(const std::vector<int>& predicate) {
  const int n = static_cast<int>(predicate.size()) - 1;
  for (int i = 0; i <= n; ++i) {
    bool constant = true;
    for (int h = i + 1; h <= n - i - 1; ++h)
      if (predicate[h] != predicate[i + 1]) constant = false;
    if (constant) return i;
  }
  return n;
}

SymmetricSpec SymmetricSpec::from_predicate(std::vector<int> predicate) {
  if (predicate.size() < 2) throw std::invalid_argument("predicate needs n+1 >= 2 entries");
  for (int v : predicate)
    if (v != 0 && v != 1) throw std::invalid_argument("predicate entries must be 0 or 1");
  SymmetricSpec s;
  s.n = static_cast<int>(predicate.size()) - 1;
  s.k_f = compute_k_f(predicate);
  s.predicate = std::move(predicate);
  return s;
}

std::vector<Rational> SymmetricSpec::values() const {
  std::vector<Rational> v(predicate.size());
  for (std::size_t h = 0; h < predicate.size(); ++h) v[h] = predicate[h];
  return v;
}

std::pair<ParityPoly, WeightDegreeReport> approx_eq_y(int n, const CubePoint& y, int degree_budget,
                                                      const Rational& error_target) {
  require_small(n);
  if (y.n != n) throw std::invalid_argument("approx_eq_y: y has the wrong length");
  if (degree_budget < 1) throw std::invalid_argument("approx_eq_y: degree budget must be at least 1");

  WeightDegreeReport report;
  report.route = "union-bound";
  std::optional<OuterFit> best;
  Rational best_weight;
  for (int l = 1; l <= n; ++l) {
    if (n % l != 0) continue;
    const OuterFit fit = fit_outer(l, degree_budget / (n / l), error_target);
    report.candidates.emplace_back(l, fit.error);
    if (!fit.feasible) continue;
    const ComposedSpectrum spec = composed_spectrum(n, fit);
    Integer total = 0;
    for (const auto& h : spec.hat) total += abs(h);
    const Rational weight = ratio(total, spec.den);
    if (!best || weight < best_weight) {
      best = fit;
      best_weight = weight;
    }
  }
  if (!best) {
    std::ostringstream os;
    for (const auto& [l, err] : report.candidates) os << " l=" << l << ":" << to_string(err);
    throw CertificationError("EQ_y approximation within the degree budget", "best errors" + os.str());
  }

  const ComposedSpectrum spec = composed_spectrum(n, *best);
  const std::uint32_t flip = ~y.mask & ((std::uint32_t{1} << n) - 1);
  ParityPoly p(n);
  for (std::uint32_t s = 0; s < spec.hat.size(); ++s) {
    if (spec.hat[s] == 0) continue;
    Rational c(spec.hat[s], spec.den);
    c.canonicalize();
    p.add(s, character(s, flip) > 0 ? c : Rational(-c));
  }

  report.blocks = best->blocks;
  report.outer_degree = best->degree;
  report.degree = p.degree();
  report.weight = parity_weight(p);
  report.error = max_error(p.cube_values(), [&](std::uint32_t x) { return Rational(x == y.mask ? 1 : 0); });
  if (report.error > error_target || report.degree > degree_budget)
    throw CertificationError("EQ_y approximation certificate", "l=" + std::to_string(best->blocks));
  const double t = std::log2(1 / to_double(error_target)) / std::log2(static_cast<double>(n));
  const double lg = std::log2(static_cast<double>(n));
  report.bound_exponent = n * t * lg * lg / degree_budget;
  report.bound_exponent_improved = n * t * lg / degree_budget;
  return {p, report};
}

std::pair<ParityPoly, WeightDegreeReport> symub_construct(const SymmetricSpec& spec, int K, const Rational& eps) {
  const int n = spec.n;
  require_small(n);
  if (K < 1) throw std::invalid_argument("symub_construct: K must be at least 1");
  if (eps <= 0) throw std::invalid_argument("symub_construct: eps must be positive");

  // Work on the side of f with fewer accepting strings.
  Integer ones = 0;
  for (int h = 0; h <= n; ++h)
    if (spec.predicate[h]) ones += binomial(n, h);
  const bool complement = ones > (Integer(1) << n) - ones;
  std::vector<int> classes;
  Integer supp = 0;
  for (int h = 0; h <= n; ++h) {
    if ((spec.predicate[h] == 1) != complement) {
      classes.push_back(h);
      supp += binomial(n, h);
    }
  }
  auto side_value = [&](int h) { return Rational((spec.predicate[h] == 1) != complement ? 1 : 0); };
  auto f_value = [&](std::uint32_t x) { return Rational(spec.predicate[std::popcount(x)]); };

  WeightDegreeReport report;
  const double lg = std::log2(static_cast<double>(n));
  report.bound_exponent = n * spec.k_f * lg * lg / K;
  report.bound_exponent_improved = n * spec.k_f * lg / K;

  auto finish = [&](ParityPoly q) {
    if (complement) {
      q *= Rational(-1);
      q.add(0, 1);
    }
    report.degree = q.degree();
    report.weight = parity_weight(q);
    report.error = max_error(q.cube_values(), f_value);
    if (report.error > eps || report.degree > K)
      throw CertificationError("symmetric approximation certificate", "route " + report.route);
    return std::pair{q, report};
  };

  if (classes.empty()) {
    report.route = "union-bound";
    return finish(ParityPoly(n));
  }

  // Union bound: every EQ_y within eps/|supp|. The sum over a weight class c
  // multiplies the AND spectrum by sum_{|m| = n - c} chi_S(m).
  const Rational per_term = eps / Rational(supp);
  std::vector<Integer> multiplier(n + 1);
  for (int j = 0; j <= n; ++j)
    for (int c : classes) multiplier[j] += character_sum(n, j, n - c);

  std::optional<ParityPoly> best;
  for (int l = 1; l <= n; ++l) {
    if (n % l != 0) continue;
    const OuterFit fit = fit_outer(l, K / (n / l), per_term);
    report.candidates.emplace_back(l, fit.error);
    if (!fit.feasible) continue;
    const ComposedSpectrum cs = composed_spectrum(n, fit);
    ParityPoly q(n);
    for (std::uint32_t s = 0; s < cs.hat.size(); ++s) {
      if (cs.hat[s] == 0) continue;
      Rational c(cs.hat[s] * multiplier[std::popcount(s)], cs.den);
      c.canonicalize();
      q.add(s, c);
    }
    if (!best || parity_weight(q) < parity_weight(*best)) {
      best = std::move(q);
      report.blocks = l;
      report.outer_degree = fit.degree;
    }
  }
  if (best) {
    report.route = "union-bound";
    return finish(*best);
  }

  // Joint fit: q(x) = sum_c sum_{|y| = c} P_c(t(dist(x, y))), one degree-K
  // polynomial per support class, chosen to minimize the total error.
  const int width = K + 1;
  std::vector<std::vector<Rational>> basis(n + 1, std::vector<Rational>(classes.size() * width));
  std::vector<Rational> target(n + 1);
  for (int h = 0; h <= n; ++h) {
    target[h] = side_value(h);
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
      const int c = classes[ci];
      for (int i = 0; i <= std::min(h, c); ++i) {
        const Integer count = binomial(h, i) * binomial(n - h, c - i);
        if (count == 0) continue;
        const Rational t = weight_to_t(n, h + c - 2 * i);
        Rational tp = 1;
        for (int j = 0; j < width; ++j) {
          basis[h][ci * width + j] += Rational(count) * tp;
          tp *= t;
        }
      }
    }
  }
  const DiscreteMinimax fit = solve_discrete_minimax(basis, target);
  std::vector<Rational> q_values(n + 1);
  for (int h = 0; h <= n; ++h)
    for (std::size_t j = 0; j < fit.coeffs.size(); ++j) q_values[h] += fit.coeffs[j] * basis[h][j];
  const auto levels = symmetric_levels(n, q_values);
  ParityPoly q(n);
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) q.add(s, levels[std::popcount(s)]);
  report.route = "joint-lp";
  report.blocks = n;
  report.outer_degree = K;
  return finish(std::move(q));
}

WeightLowerBound weight_lower_bound(const LPDualCertificate& cert, int K, const Rational& target) {
  if (!cert.witness) throw std::invalid_argument("weight_lower_bound: certificate has no symmetric witness");
  if (K < 0) throw std::invalid_argument("weight_lower_bound: K must be nonnegative");
  WeightLowerBound out;
  for (int j = 0; j <= std::min(K, cert.witness->n); ++j) {
    const Rational a = abs(symmetric_character_pairing(*cert.witness, j));
    if (a > out.max_correlation) out.max_correlation = a;
  }
  if (out.max_correlation == 0) {
    out.unbounded = true;
    return out;
  }
  const Rational gap = cert.epsilon - target;
  out.bound = gap > 0 ? Rational(gap / out.max_correlation) : Rational(0);
  return out;
}

}  // namespace dualpoly

#include "dualpoly/dual_and.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dualpoly {

void DualAndParams::validate() const {
  if (n < 1 || n > kMaxCubeBits) throw std::invalid_argument("n must lie in [1, 24]");
  if (w.n() != n) throw std::invalid_argument("weight vector length differs from n");
  w.validate();
  if (d <= 0 || d > w.l1()) throw std::invalid_argument("d must lie in (0, ||w||_1]");
}

Rational and_pm(std::uint32_t x) { return x == 0 ? Rational(1) : Rational(0); }

DualAndWitness build_phi(const DualAndParams& params) {
  params.validate();
  const int n = params.n;
  const std::size_t size = std::size_t{1} << n;
  const Rational limit = (params.w.l1() - params.d) / 2;

  std::vector<std::int64_t> c(size, 0);
  std::int64_t h_size = 0;
  for (std::size_t s = 0; s < size; ++s) {
    if (params.w.of_set(static_cast<std::uint32_t>(s)) <= limit) {
      c[s] = 1;
      ++h_size;
    }
  }
  if (h_size == 0) throw std::invalid_argument("H is empty: d = " + to_string(params.d) + " is too large for w");
  walsh_hadamard_inplace(c);

  DualAndWitness out;
  out.params = params;
  out.h_size = Integer(static_cast<long>(h_size));
  out.z = ratio(Integer(1) << n, out.h_size);
  out.z.canonicalize();
  out.epsilon = 1 / out.z;

  // phi(x) = (-1)^n chi_[n](x) c(x)^2 / (2^n |H|); chi_[n](0) = 1, so the
  // sign at the all-(+1) point is (-1)^n.
  out.negated = (n % 2) == 1;
  const Rational denom = Rational(Integer(1) << n) * Rational(out.h_size);
  out.phi.n = n;
  out.phi.representation = DualWitness::Representation::Cube;
  out.phi.claimed_degree = params.d;
  out.phi.values.resize(size);
  for (std::size_t x = 0; x < size; ++x) {
    const int chi = character(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(size - 1));
    const int sgn = ((n % 2) ? -chi : chi) * (out.negated ? -1 : 1);
    Integer num(static_cast<long>(c[x]));
    num *= num;
    if (sgn < 0) num = -num;
    out.phi.values[x] = Rational(num) / denom;
  }
  out.char_sums = std::move(c);
  return out;
}

DualWitness build_phi_symmetric(int n, const Rational& d) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (d <= 0 || d > n) throw std::invalid_argument("d must lie in (0, n]");
  // H = {S : |S| <= r} with r = floor((n - d)/2).
  const Rational half = (Rational(n) - d) / 2;
  const Integer r_int = half.get_num() / half.get_den();
  const long r = r_int.get_si();
  Integer h_size = 0;
  for (long j = 0; j <= r; ++j) h_size += binomial(n, j);
  const Rational denom = Rational(Integer(1) << n) * Rational(h_size);

  DualWitness phi;
  phi.n = n;
  phi.representation = DualWitness::Representation::Symmetric;
  phi.claimed_degree = d;
  phi.values.resize(n + 1);
  for (int h = 0; h <= n; ++h) {
    // c(x) for |x| = h is sum_{j <= r} sum_{|S| = j} chi_S(x).
    Integer c = 0;
    for (long j = 0; j <= r; ++j) c += character_sum(n, h, static_cast<int>(j));
    Rational v = Rational(c * c) / denom;
    phi.values[h] = (h % 2) ? Rational(-v) : v;
  }
  return phi;
}

WitnessReport verify_witness(const DualWitness& phi, const std::function<Rational(std::uint32_t)>& f,
                             const Rational& d, const WeightVector& w) {
  if (w.n() != phi.n) throw std::invalid_argument("verify_witness: weight vector length differs from n");
  WitnessReport report;
  report.l1 = phi.l1_norm();
  report.correlation = pair_with_witness(phi, f);
  const auto spec = witness_spectrum(phi);

  std::vector<int> order(phi.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return w.w[a] < w.w[b]; });

  report.pure_high_degree = true;
  report.boundary_orthogonal = true;
  // Depth-first over subsets with w(S) <= d, indices in ascending weight.
  auto visit = [&](auto&& self, std::size_t next, std::uint32_t s, const Rational& ws) -> void {
    if (ws < d) {
      if (spec[s] != 0 && report.pure_high_degree) {
        report.pure_high_degree = false;
        report.violating_set = s;
      }
    } else if (spec[s] != 0) {
      report.boundary_orthogonal = false;
    }
    for (std::size_t j = next; j < order.size(); ++j) {
      const Rational wt = ws + w.w[order[j]];
      if (wt > d) break;
      self(self, j + 1, s | (std::uint32_t{1} << order[j]), wt);
    }
  };
  visit(visit, 0, 0, Rational(0));
  return report;
}

Rational epsilon_of(const DualAndParams& params) {
  params.validate();
  const std::uint32_t size = std::uint32_t{1} << params.n;
  std::uint64_t hits = 0;
  const Rational total = params.w.l1();
  // <w, X> = ||w||_1 - 2 w(S) where S is the set of -1 coordinates.
  for (std::uint32_t s = 0; s < size; ++s)
    if (total - 2 * params.w.of_set(s) >= params.d) ++hits;
  return ratio(Integer(static_cast<unsigned long>(hits)), Integer(1) << params.n);
}

WeightedCorollary weighted_corollary_check(const WeightVector& w) {
  w.validate();
  const int n = w.n();
  if (n < 1 || n > kMaxCubeBits) throw std::invalid_argument("weighted_corollary_check: n must lie in [1, 24]");
  const Rational quarter_l2sq = w.l2_squared() / 4;
  const Rational total = w.l1();
  const std::uint32_t size = std::uint32_t{1} << n;
  std::uint64_t hits = 0;
  for (std::uint32_t s = 0; s < size; ++s) {
    const Rational ip = total - 2 * w.of_set(s);
    // ip >= ||w||_2 / 2 with both sides compared exactly by squaring.
    if (ip >= 0 && ip * ip >= quarter_l2sq) ++hits;
  }
  WeightedCorollary out;
  out.probability = ratio(Integer(static_cast<unsigned long>(hits)), Integer(1) << n);
  out.holds = out.probability >= Rational(3, 32);
  return out;
}

// ---------------------------------------------------------------------------

ShareSampler::ShareSampler(const DualWitness& psi) : n_(psi.n) {
  const std::vector<Rational> values = psi.to_cube();
  Integer lcm = 1;
  for (const auto& v : values)
    if (v != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  std::uint64_t pos_total = 0;
  std::uint64_t neg_total = 0;
  for (std::size_t x = 0; x < values.size(); ++x) {
    if (values[x] == 0) continue;
    Rational scaled = abs(values[x]) * Rational(lcm);
    const Integer num = scaled.get_num();
    if (!num.fits_ulong_p()) throw std::invalid_argument("ShareSampler: weights exceed 64-bit range");
    const std::uint64_t wt = num.get_ui();
    Side& s = values[x] > 0 ? positive_ : negative_;
    std::uint64_t& total = values[x] > 0 ? pos_total : neg_total;
    if (total > UINT64_MAX - wt) throw std::invalid_argument("ShareSampler: total weight exceeds 64-bit range");
    total += wt;
    s.points.push_back(static_cast<std::uint32_t>(x));
    s.cumulative.push_back(total);
  }
  if (positive_.points.empty() || negative_.points.empty())
    throw std::invalid_argument("ShareSampler: witness needs both a positive and a negative part");
}

const ShareSampler::Side& ShareSampler::side(int secret) const {
  if (secret == 1) return positive_;
  if (secret == -1) return negative_;
  throw std::invalid_argument("secret must be +1 or -1");
}

CubePoint ShareSampler::sample(int secret, std::mt19937_64& rng) const {
  const Side& s = side(secret);
  std::uniform_int_distribution<std::uint64_t> dist(0, s.cumulative.back() - 1);
  const std::uint64_t u = dist(rng);
  const auto it = std::upper_bound(s.cumulative.begin(), s.cumulative.end(), u);
  return {n_, s.points[static_cast<std::size_t>(it - s.cumulative.begin())]};
}

std::vector<Rational> ShareSampler::exact_table(int secret) const {
  const Side& s = side(secret);
  std::vector<Rational> table(std::size_t{1} << n_);
  const Integer total(static_cast<unsigned long>(s.cumulative.back()));
  std::uint64_t prev = 0;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    Rational p(Integer(static_cast<unsigned long>(s.cumulative[i] - prev)), total);
    p.canonicalize();
    table[s.points[i]] = p;
    prev = s.cumulative[i];
  }
  return table;
}

Rational reconstruction_advantage(const ShareSampler& sampler, const std::function<Rational(std::uint32_t)>& f) {
  const auto plus = sampler.exact_table(1);
  const auto minus = sampler.exact_table(-1);
  Rational adv = 0;
  for (std::size_t x = 0; x < plus.size(); ++x) {
    if (plus[x] == 0 && minus[x] == 0) continue;
    adv += (plus[x] - minus[x]) * f(static_cast<std::uint32_t>(x));
  }
  return adv;
}

}  // namespace dualpoly

#include "dualpoly/boolcube.hpp"

#include <string>

namespace dualpoly {

std::vector<Rational> walsh_hadamard(std::vector<Rational> values) {
  walsh_hadamard_inplace(values);
  return values;
}

Rational WeightVector::l1() const {
  Rational s = 0;
  for (const auto& x : w) s += x;
  return s;
}

Rational WeightVector::l2_squared() const {
  Rational s = 0;
  for (const auto& x : w) s += x * x;
  return s;
}

Rational WeightVector::of_set(std::uint32_t s) const {
  Rational total = 0;
  for (int i = 0; i < n(); ++i)
    if ((s >> i) & 1u) total += w[i];
  return total;
}

void WeightVector::validate() const {
  for (const auto& x : w)
    if (x < 0) throw std::invalid_argument("weight vector has a negative entry " + to_string(x));
}

// ---------------------------------------------------------------------------

ParityPoly ParityPoly::from_cube_values(int n, const std::vector<Rational>& values) {
  if (values.size() != (std::size_t{1} << n)) throw std::invalid_argument("from_cube_values: need 2^n values");
  std::vector<Rational> hat = walsh_hadamard(values);
  const Rational scale = pow2(-n);
  ParityPoly p(n);
  for (std::size_t s = 0; s < hat.size(); ++s) {
    if (hat[s] != 0) p.coeffs_.emplace(static_cast<std::uint32_t>(s), hat[s] * scale);
  }
  return p;
}

Rational ParityPoly::coeff(std::uint32_t s) const {
  auto it = coeffs_.find(s);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void ParityPoly::add(std::uint32_t s, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Rational ParityPoly::operator()(std::uint32_t x) const {
  Rational v = 0;
  for (const auto& [s, c] : coeffs_) {
    if (character(s, x) > 0)
      v += c;
    else
      v -= c;
  }
  return v;
}

std::vector<Rational> ParityPoly::cube_values() const {
  std::vector<Rational> v(std::size_t{1} << n_);
  for (const auto& [s, c] : coeffs_) v[s] = c;
  walsh_hadamard_inplace(v);
  return v;
}

int ParityPoly::degree() const {
  int d = -1;
  for (const auto& [s, c] : coeffs_) d = std::max(d, std::popcount(s));
  return d;
}

ParityPoly& ParityPoly::operator+=(const ParityPoly& rhs) {
  n_ = std::max(n_, rhs.n_);
  for (const auto& [s, c] : rhs.coeffs_) add(s, c);
  return *this;
}

ParityPoly& ParityPoly::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [mask, c] : coeffs_) c *= s;
  return *this;
}

Rational parity_weight(const ParityPoly& p) {
  Rational w = 0;
  for (const auto& [s, c] : p.coeffs()) w += abs(c);
  return w;
}

ParityPoly basis_convert(const MonomialPoly& p) {
  ParityPoly out(p.n);
  for (const auto& [t, c] : p.coeffs) {
    const Rational scale = c * pow2(-std::popcount(t));
    // Enumerate subsets S of T.
    std::uint32_t s = t;
    while (true) {
      out.add(s, (std::popcount(s) & 1) ? Rational(-scale) : scale);
      if (s == 0) break;
      s = (s - 1) & t;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

void SymmetricDistribution::validate() const {
  if (n < 0 || weight_probs.size() != static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("symmetric distribution needs n+1 weight probabilities");
  Rational total = 0;
  for (const auto& p : weight_probs) {
    if (p < 0) throw std::invalid_argument("negative probability " + to_string(p));
    total += p;
  }
  if (total != 1) throw std::invalid_argument("probabilities sum to " + to_string(total) + ", not 1");
}

Rational SymmetricDistribution::per_string(int h) const {
  return weight_probs.at(h) / Rational(binomial(n, h));
}

SymmetricDistribution SymmetricDistribution::point_mass(int n, int h) {
  SymmetricDistribution d{n, std::vector<Rational>(n + 1)};
  d.weight_probs.at(h) = 1;
  return d;
}

SymmetricDistribution SymmetricDistribution::uniform_cube(int n) {
  SymmetricDistribution d{n, std::vector<Rational>(n + 1)};
  for (int h = 0; h <= n; ++h) d.weight_probs[h] = Rational(binomial(n, h)) * pow2(-n);
  return d;
}

SymmetricDistribution project_symmetric(const SymmetricDistribution& d, int K) {
  const int n = d.n;
  if (K < 1 || K > n) throw std::invalid_argument("project_symmetric: K must lie in [1, n]");
  SymmetricDistribution out{K, std::vector<Rational>(K + 1)};
  for (int w = 0; w <= K; ++w) {
    Rational per = 0;
    for (int h = 0; h <= n - K; ++h) {
      if (d.weight_probs[h + w] == 0) continue;
      per += Rational(binomial(n - K, h)) * d.weight_probs[h + w] / Rational(binomial(n, h + w));
    }
    out.weight_probs[w] = per * Rational(binomial(K, w));
  }
  return out;
}

Rational stat_distance_symmetric(const SymmetricDistribution& d1, const SymmetricDistribution& d2) {
  if (d1.n != d2.n) throw std::invalid_argument("stat_distance_symmetric: mismatched n");
  Rational s = 0;
  for (int h = 0; h <= d1.n; ++h) s += abs(d1.weight_probs[h] - d2.weight_probs[h]);
  return s / 2;
}

bool kwise_indistinguishable(const SymmetricDistribution& d1, const SymmetricDistribution& d2, int k) {
  if (d1.n != d2.n) throw std::invalid_argument("kwise_indistinguishable: mismatched n");
  if (k < 0 || k > d1.n) throw std::invalid_argument("kwise_indistinguishable: k out of range");
  if (k == 0) return true;
  return project_symmetric(d1, k).weight_probs == project_symmetric(d2, k).weight_probs;
}

Integer character_sum(int n, int j, int h) {
  Integer s = 0;
  for (int i = 0; i <= std::min(j, h); ++i) {
    Integer term = binomial(j, i) * binomial(n - j, h - i);
    if (i & 1)
      s -= term;
    else
      s += term;
  }
  return s;
}

std::vector<Rational> symmetric_levels(int n, const std::vector<Rational>& g) {
  if (g.size() != static_cast<std::size_t>(n + 1)) throw std::invalid_argument("symmetric_levels: need n+1 values");
  std::vector<Rational> a(n + 1);
  const Rational scale = pow2(-n);
  for (int j = 0; j <= n; ++j) {
    Rational s = 0;
    for (int h = 0; h <= n; ++h)
      if (g[h] != 0) s += g[h] * Rational(character_sum(n, j, h));
    a[j] = s * scale;
  }
  return a;
}

Rational symmetric_weight(int n, const std::vector<Rational>& g) {
  const auto a = symmetric_levels(n, g);
  Rational w = 0;
  for (int j = 0; j <= n; ++j) w += Rational(binomial(n, j)) * abs(a[j]);
  return w;
}

// ---------------------------------------------------------------------------

Rational DualWitness::value_at(std::uint32_t x) const {
  return representation == Representation::Symmetric ? values.at(std::popcount(x)) : values.at(x);
}

Rational DualWitness::l1_norm() const {
  Rational s = 0;
  if (representation == Representation::Symmetric) {
    for (int h = 0; h <= n; ++h) s += Rational(binomial(n, h)) * abs(values.at(h));
  } else {
    for (const auto& v : values) s += abs(v);
  }
  return s;
}

std::vector<Rational> DualWitness::to_cube() const {
  if (representation == Representation::Cube) return values;
  if (n > kMaxCubeBits) throw std::invalid_argument("to_cube: n too large to enumerate");
  std::vector<Rational> out(std::size_t{1} << n);
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = values.at(std::popcount(static_cast<std::uint32_t>(x)));
  return out;
}

std::vector<Rational> witness_spectrum(const DualWitness& psi) { return walsh_hadamard(psi.to_cube()); }

Rational symmetric_character_pairing(const DualWitness& psi, int j) {
  if (psi.representation != DualWitness::Representation::Symmetric)
    throw std::invalid_argument("symmetric_character_pairing: witness is not symmetric");
  Rational s = 0;
  for (int h = 0; h <= psi.n; ++h)
    if (psi.values[h] != 0) s += psi.values[h] * Rational(character_sum(psi.n, j, h));
  return s;
}

Rational pair_with_witness(const DualWitness& psi, const ParityPoly& p) {
  if (p.coeffs().empty()) return 0;
  if (p.n() > psi.n) throw std::invalid_argument("pair_with_witness: polynomial has more variables than witness");
  Rational s = 0;
  if (psi.representation == DualWitness::Representation::Symmetric) {
    std::vector<Rational> level(psi.n + 1);
    std::vector<bool> done(psi.n + 1, false);
    for (const auto& [mask, c] : p.coeffs()) {
      const int j = std::popcount(mask);
      if (!done[j]) {
        level[j] = symmetric_character_pairing(psi, j);
        done[j] = true;
      }
      s += c * level[j];
    }
    return s;
  }
  const auto spec = witness_spectrum(psi);
  for (const auto& [mask, c] : p.coeffs()) s += c * spec.at(mask);
  return s;
}

Rational pair_with_witness(const DualWitness& psi, const std::function<Rational(std::uint32_t)>& f) {
  if (psi.n > kMaxCubeBits) throw std::invalid_argument("pair_with_witness: n too large to enumerate");
  Rational s = 0;
  const std::uint32_t size = std::uint32_t{1} << psi.n;
  for (std::uint32_t x = 0; x < size; ++x) {
    const Rational v = psi.value_at(x);
    if (v != 0) s += v * f(x);
  }
  return s;
}

Rational pair_symmetric(const DualWitness& psi, const std::vector<Rational>& f_by_weight) {
  if (psi.representation != DualWitness::Representation::Symmetric)
    throw std::invalid_argument("pair_symmetric: witness is not symmetric");
  if (f_by_weight.size() != static_cast<std::size_t>(psi.n + 1))
    throw std::invalid_argument("pair_symmetric: need n+1 function values");
  Rational s = 0;
  for (int h = 0; h <= psi.n; ++h) s += Rational(binomial(psi.n, h)) * psi.values[h] * f_by_weight[h];
  return s;
}

}  // namespace dualpoly

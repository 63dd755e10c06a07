#include "dualpoly/ratpoly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dualpoly {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::identity() { return RationalPoly({0, 1}); }

RationalPoly RationalPoly::monomial(unsigned power, const Rational& c) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational RationalPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

double RationalPoly::eval_double(double t) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

std::complex<double> RationalPoly::eval_complex(std::complex<double> s) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + it->get_d();
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::compose_affine(const Rational& a, const Rational& b) const {
  // Horner in the polynomial ring: acc = acc * (a t + b) + c_i.
  const RationalPoly lin({b, a});
  RationalPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= lin;
    acc += constant(*it);
  }
  return acc;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Rational RationalPoly::l1_norm() const {
  Rational s = 0;
  for (const auto& c : coeffs_) s += abs(c);
  return s;
}

PolyDivision divide(const RationalPoly& num, const RationalPoly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = num.coeffs();
  const int dd = den.degree();
  const Rational lead = den.coeffs().back();
  std::vector<Rational> quot(num.degree() >= dd ? num.degree() - dd + 1 : 0);
  for (int i = num.degree(); i >= dd; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / lead;
    quot[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den.coeffs()[j];
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * Rational(1 / a.coeffs().back());
}

Rational eval_poly(const RationalPoly& p, const Rational& t) { return p(t); }

RationalPoly poly_from_roots(std::span<const Rational> roots, const Rational& scale) {
  RationalPoly p = RationalPoly::constant(scale);
  for (const auto& z : roots) p *= RationalPoly({-z, 1});
  return p;
}

RationalPoly interpolate(std::span<const Rational> points, std::span<const Rational> values) {
  if (points.size() != values.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t m = points.size();
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      const Rational gap = points[i] - points[i - level];
      if (gap == 0) throw std::invalid_argument("interpolate: repeated point");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  RationalPoly p;
  for (std::size_t i = m; i-- > 0;) {
    p *= RationalPoly({-points[i], 1});
    p += RationalPoly::constant(dd[i]);
  }
  return p;
}

RationalPoly cheb_T(unsigned d) {
  RationalPoly prev = RationalPoly::constant(1);
  if (d == 0) return prev;
  RationalPoly cur = RationalPoly::identity();
  const RationalPoly two_t({0, 2});
  for (unsigned i = 1; i < d; ++i) {
    RationalPoly next = two_t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(std::map<int, Rational> coeffs) {
  for (auto& [e, c] : coeffs) add_term(e, c);
}

LaurentPoly LaurentPoly::constant(const Rational& c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPoly::add_term(int exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exponent() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
int LaurentPoly::max_exponent() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
int LaurentPoly::span() const { return max_exponent() - min_exponent(); }

std::complex<double> LaurentPoly::eval_complex(std::complex<double> s) const {
  std::complex<double> acc = 0;
  for (const auto& [e, c] : coeffs_) acc += c.get_d() * std::pow(s, e);
  return acc;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : rhs.coeffs_) out.add_term(e1 + e2, c1 * c2);
  *this = std::move(out);
  return *this;
}

// ---------------------------------------------------------------------------
// ChebyshevExpansion

ChebyshevExpansion::ChebyshevExpansion(std::vector<Rational> half_coeffs) : half_(std::move(half_coeffs)) {
  while (!half_.empty() && half_.back() == 0) half_.pop_back();
}

Rational ChebyshevExpansion::coeff(int d) const {
  const std::size_t i = static_cast<std::size_t>(d < 0 ? -d : d);
  return i < half_.size() ? half_[i] : Rational(0);
}

RationalPoly ChebyshevExpansion::to_poly() const {
  RationalPoly p;
  for (std::size_t d = 0; d < half_.size(); ++d) {
    if (half_[d] == 0) continue;
    p += cheb_T(static_cast<unsigned>(d)) * (d == 0 ? half_[0] : Rational(2 * half_[d]));
  }
  return p;
}

ChebyshevExpansion cheb_transform(const RationalPoly& p) {
  if (p.is_zero()) return {};
  const int K = p.degree();
  std::vector<RationalPoly> basis;
  basis.reserve(K + 1);
  for (int d = 0; d <= K; ++d) basis.push_back(cheb_T(static_cast<unsigned>(d)));

  // Triangular solve from the top: T_d has leading coefficient 2^{d-1}.
  RationalPoly rest = p;
  std::vector<Rational> one_sided(K + 1);
  for (int d = K; d >= 0; --d) {
    const Rational c = rest.coeff(d);
    if (c == 0) continue;
    one_sided[d] = c / basis[d].coeffs().back();
    rest -= basis[d] * one_sided[d];
  }
  std::vector<Rational> half(K + 1);
  half[0] = one_sided[0];
  for (int d = 1; d <= K; ++d) half[d] = one_sided[d] / 2;
  return ChebyshevExpansion(std::move(half));
}

LaurentPoly chebyshev_laurent(std::span<const Rational> roots, const Rational& scale) {
  LaurentPoly g = LaurentPoly::constant(scale);
  for (const auto& z : roots) {
    g *= LaurentPoly({{-1, Rational(1, 2)}, {0, -z}, {1, Rational(1, 2)}});
  }
  return g;
}

ChebyshevExpansion cheb_transform_factored(std::span<const Rational> roots, const Rational& scale) {
  const LaurentPoly g = chebyshev_laurent(roots, scale);
  std::vector<Rational> half(roots.size() + 1);
  for (std::size_t d = 0; d <= roots.size(); ++d) half[d] = g.coeff(static_cast<int>(d));
  return ChebyshevExpansion(std::move(half));
}

RationalPoly cheb_truncate(const ChebyshevExpansion& e, int k) {
  if (k < 0) throw std::invalid_argument("cheb_truncate: k must be nonnegative");
  std::vector<Rational> kept;
  for (int d = 0; d < k && d <= e.degree(); ++d) kept.push_back(e.coeff(d));
  return ChebyshevExpansion(std::move(kept)).to_poly();
}

Rational sigma_inner(const ChebyshevExpansion& e1, const ChebyshevExpansion& e2) {
  Rational s = e1.coeff(0) * e2.coeff(0);
  const int top = std::min(e1.degree(), e2.degree());
  for (int d = 1; d <= top; ++d) s += 2 * e1.coeff(d) * e2.coeff(d);
  return s;
}

double parseval_circle_check(const LaurentPoly& g, int samples) {
  if (samples <= 2 * g.span() || samples <= 0) {
    throw std::invalid_argument("parseval_circle_check: samples must exceed twice the exponent span");
  }
  double coeff_energy = 0;
  for (const auto& [e, c] : g.terms()) coeff_energy += c.get_d() * c.get_d();
  double circle = 0;
  for (int j = 0; j < samples; ++j) {
    const double theta = 2 * std::numbers::pi * j / samples;
    circle += std::norm(g.eval_complex(std::polar(1.0, theta)));
  }
  circle /= samples;
  return std::abs(coeff_energy - circle);
}

}  // namespace dualpoly

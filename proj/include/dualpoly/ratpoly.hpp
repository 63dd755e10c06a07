#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "dualpoly/rational.hpp"

namespace dualpoly {

/// Exact univariate polynomial in the power basis, coefficients lowest power
/// first. The stored vector never has a trailing zero; the zero polynomial is
/// the empty vector and has degree -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  /// The polynomial t.
  static RationalPoly identity();
  static RationalPoly monomial(unsigned power, const Rational& c = 1);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of t^i, zero beyond the degree.
  Rational coeff(std::size_t i) const;

  Rational operator()(const Rational& t) const;
  double eval_double(double t) const;
  std::complex<double> eval_complex(std::complex<double> s) const;

  RationalPoly derivative() const;
  /// p(a*t + b).
  RationalPoly compose_affine(const Rational& a, const Rational& b) const;

  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const RationalPoly& rhs);
  RationalPoly& operator*=(const Rational& s);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
  friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
  friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }
  RationalPoly operator-() const;

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Sum of absolute values of the coefficients.
  Rational l1_norm() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
struct PolyDivision {
  RationalPoly quotient;
  RationalPoly remainder;
};
PolyDivision divide(const RationalPoly& num, const RationalPoly& den);
/// Monic gcd (zero if both inputs are zero).
RationalPoly gcd(RationalPoly a, RationalPoly b);

Rational eval_poly(const RationalPoly& p, const Rational& t);

/// scale * prod (t - z).
RationalPoly poly_from_roots(std::span<const Rational> roots, const Rational& scale);

/// The unique polynomial of degree < points.size() through (points[i],
/// values[i]), by Newton divided differences. Points must be distinct.
RationalPoly interpolate(std::span<const Rational> points, std::span<const Rational> values);

/// Chebyshev polynomial of the first kind, by T_{d+1} = 2t T_d - T_{d-1}.
RationalPoly cheb_T(unsigned d);

/// Finitely supported map from integer exponent to coefficient.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::map<int, Rational> coeffs);

  static LaurentPoly constant(const Rational& c);
  static LaurentPoly monomial(int exponent, const Rational& c = 1);

  Rational coeff(int exponent) const;
  const std::map<int, Rational>& terms() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int min_exponent() const;
  int max_exponent() const;
  /// max_exponent - min_exponent, zero for the zero polynomial.
  int span() const;

  std::complex<double> eval_complex(std::complex<double> s) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void add_term(int exponent, const Rational& c);
  std::map<int, Rational> coeffs_;
};

/// Symmetric Chebyshev expansion p = sum_{d=-K}^{K} c_d T_d with c_{-d} = c_d.
/// Only c_0..c_K are stored; the one-sided T_d coefficient of p is 2 c_d for
/// d > 0.
class ChebyshevExpansion {
 public:
  ChebyshevExpansion() = default;
  explicit ChebyshevExpansion(std::vector<Rational> half_coeffs);

  /// c_d for any integer d, using c_{-d} = c_d; zero outside [-K, K].
  Rational coeff(int d) const;
  const std::vector<Rational>& half_coeffs() const noexcept { return half_; }
  int degree() const noexcept { return static_cast<int>(half_.size()) - 1; }

  /// Expands back to the power basis.
  RationalPoly to_poly() const;

  friend bool operator==(const ChebyshevExpansion& a, const ChebyshevExpansion& b) { return a.half_ == b.half_; }

 private:
  std::vector<Rational> half_;
};

/// Chebyshev expansion of an arbitrary polynomial, by back substitution
/// against the triangular basis change to T_0..T_K.
ChebyshevExpansion cheb_transform(const RationalPoly& p);

/// g(s) = scale * prod_z (s + 1/s - 2z)/2. Its coefficient of s^d is the
/// Chebyshev coefficient c_d of scale * prod (t - z).
LaurentPoly chebyshev_laurent(std::span<const Rational> roots, const Rational& scale);

/// Chebyshev expansion of scale * prod (t - z), read off chebyshev_laurent.
ChebyshevExpansion cheb_transform_factored(std::span<const Rational> roots, const Rational& scale);

/// sum_{|d| < k} c_d T_d in the power basis.
RationalPoly cheb_truncate(const ChebyshevExpansion& e, int k);

/// E_{t ~ sigma}[p1 p2] for the arcsine probability measure sigma:
/// a_0 b_0 + 2 sum_{d>0} a_d b_d in symmetric half-coefficients.
Rational sigma_inner(const ChebyshevExpansion& e1, const ChebyshevExpansion& e2);

/// |sum |g_i|^2 - mean_{z^N = 1} |g(z)|^2| in double precision. Requires
/// samples > 2 * g.span(); throws std::invalid_argument otherwise.
double parseval_circle_check(const LaurentPoly& g, int samples);

}  // namespace dualpoly

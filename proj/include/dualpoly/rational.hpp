#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dualpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when a certified property fails to hold on a concrete instance.
/// Distinct from std::invalid_argument, which signals bad input.
class CertificationError : public std::runtime_error {
 public:
  CertificationError(std::string property, std::string instance)
      : std::runtime_error(property + " violated at " + instance),
        property_(std::move(property)),
        instance_(std::move(instance)) {}

  const std::string& property() const noexcept { return property_; }
  const std::string& instance() const noexcept { return instance_; }

 private:
  std::string property_;
  std::string instance_;
};

/// Parses "a/b", "-a/b" or "a". Result is canonicalized.
Rational parse_rational(std::string_view text);

/// Always "num/den" in lowest terms, e.g. "1/4", "-3/1".
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

Rational power(const Rational& base, unsigned exponent);

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline int sign(const Rational& q) { return sgn(q); }

/// num/den in lowest terms; throws std::domain_error on a zero denominator.
Rational ratio(const Integer& num, const Integer& den);

/// 2^e as a rational, e may be negative.
Rational pow2(long e);

}  // namespace dualpoly

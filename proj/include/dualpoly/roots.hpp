#pragma once

#include <vector>

#include "dualpoly/ratpoly.hpp"

namespace dualpoly {

/// An isolating interval [lo, hi] holding exactly one real root. When the
/// root was hit exactly, lo == hi.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Sturm chain p, p', -rem(p, p'), ... of a nonzero polynomial.
std::vector<RationalPoly> sturm_chain(const RationalPoly& p);

/// Real roots of p in the closed interval [lo, hi], each isolated to an
/// interval of width at most `width`. Multiple roots are reported once.
/// Throws std::invalid_argument for the zero polynomial or lo > hi.
std::vector<RootInterval> isolate_real_roots(const RationalPoly& p, const Rational& lo, const Rational& hi,
                                             const Rational& width = pow2(-40));

/// Certified enclosure of max_{t in [lo, hi]} |p(t)|: lower is attained at
/// `argmax`, upper is a rigorous bound from the isolated critical points.
struct SupNormCertificate {
  Rational lower;
  Rational upper;
  Rational argmax;
};

SupNormCertificate certified_sup_norm(const RationalPoly& p, const Rational& lo, const Rational& hi,
                                      const Rational& width = pow2(-40));

}  // namespace dualpoly

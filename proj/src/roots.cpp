#include "dualpoly/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace dualpoly {

namespace {

int sign_variations(const std::vector<RationalPoly>& chain, const Rational& t) {
  int count = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sign(q(t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

RationalPoly square_free(const RationalPoly& p) {
  const RationalPoly g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return divide(p, g).quotient;
}

// Roots in the half-open interval (a, b], given V(a) - V(b) = count.
void bisect(const RationalPoly& f, const std::vector<RationalPoly>& chain, const Rational& a, const Rational& b,
            int va, int vb, const Rational& width, std::vector<RootInterval>& out) {
  const int count = va - vb;
  if (count <= 0) return;
  if (count == 1 && b - a <= width) {
    out.push_back({a, b});
    return;
  }
  Rational mid = (a + b) / 2;
  if (f(mid) == 0) {
    const int vm = sign_variations(chain, mid);
    // Sturm counts treat the root at mid as belonging to (a, mid].
    bisect(f, chain, a, mid, va, vm, width, out);
    bisect(f, chain, mid, b, vm, vb, width, out);
    return;
  }
  const int vm = sign_variations(chain, mid);
  bisect(f, chain, a, mid, va, vm, width, out);
  bisect(f, chain, mid, b, vm, vb, width, out);
}

}  // namespace

std::vector<RationalPoly> sturm_chain(const RationalPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
  std::vector<RationalPoly> chain{p};
  if (p.degree() == 0) return chain;
  chain.push_back(p.derivative());
  while (true) {
    RationalPoly r = divide(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

std::vector<RootInterval> isolate_real_roots(const RationalPoly& p, const Rational& lo, const Rational& hi,
                                             const Rational& width) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  if (lo > hi) throw std::invalid_argument("isolate_real_roots: empty interval");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;
  const RationalPoly f = square_free(p);
  const auto chain = sturm_chain(f);
  if (f(lo) == 0) out.push_back({lo, lo});
  bisect(f, chain, lo, hi, sign_variations(chain, lo), sign_variations(chain, hi), width, out);
  // Collapse intervals whose right end is an exact root.
  for (auto& r : out) {
    if (r.lo != r.hi && f(r.hi) == 0) r.lo = r.hi;
  }
  return out;
}

SupNormCertificate certified_sup_norm(const RationalPoly& p, const Rational& lo, const Rational& hi,
                                      const Rational& width) {
  if (lo > hi) throw std::invalid_argument("certified_sup_norm: empty interval");
  SupNormCertificate cert{abs(p(lo)), abs(p(lo)), lo};
  auto witness = [&](const Rational& t) {
    const Rational v = abs(p(t));
    if (v > cert.lower) {
      cert.lower = v;
      cert.argmax = t;
    }
    if (v > cert.upper) cert.upper = v;
  };
  witness(hi);
  const RationalPoly dp = p.derivative();
  if (dp.is_zero()) return cert;

  // |p(t) - p(a)| <= (b - a) * max |p'| on [a, b] <= (b - a) * sum i |p_i| M^{i-1}.
  const Rational m = std::max({Rational(1), abs(lo), abs(hi)});
  Rational lipschitz = 0;
  Rational mp = 1;
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) {
    lipschitz += static_cast<long>(i) * abs(p.coeffs()[i]) * mp;
    mp *= m;
  }
  for (const auto& r : isolate_real_roots(dp, lo, hi, width)) {
    witness(r.lo);
    if (r.lo == r.hi) continue;
    witness(r.hi);
    const Rational bound = std::min(abs(p(r.lo)), abs(p(r.hi))) + (r.hi - r.lo) * lipschitz;
    if (bound > cert.upper) cert.upper = bound;
  }
  return cert;
}

}  // namespace dualpoly

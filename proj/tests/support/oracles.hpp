#pragma once

// Independent brute-force oracles. Nothing here calls the library routine it
// is used to check; shared types and Rational arithmetic only.

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "dualpoly/boolcube.hpp"

namespace oracle {

using dualpoly::Integer;
using dualpoly::Rational;

inline int chi(std::uint32_t s, std::uint32_t x) { return (std::popcount(s & x) % 2) ? -1 : 1; }

// C(n, k) from an additive Pascal triangle; rows are kept between calls.
inline Integer pascal(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  static std::vector<std::vector<Integer>> rows{{1}};
  while (static_cast<int>(rows.size()) <= n) {
    const auto& row = rows.back();
    const std::size_t i = row.size();
    std::vector<Integer> next(i + 1);
    next[0] = next[i] = 1;
    for (std::size_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    rows.push_back(std::move(next));
  }
  return rows[n][k];
}

// out[x] = sum_S in[S] chi_S(x) by the O(4^n) double loop.
inline std::vector<Rational> naive_transform(const std::vector<Rational>& in) {
  std::vector<Rational> out(in.size());
  for (std::uint32_t x = 0; x < in.size(); ++x)
    for (std::uint32_t s = 0; s < in.size(); ++s) out[x] += chi(s, x) * in[s];
  return out;
}

// Per-string probabilities on {0,1}^n of a weight distribution.
inline std::vector<Rational> per_string_table(const dualpoly::SymmetricDistribution& d) {
  const int n = d.n;
  std::vector<int> count(n + 1, 0);
  for (std::uint32_t x = 0; x < (1u << n); ++x) ++count[std::popcount(x)];
  std::vector<Rational> out(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < out.size(); ++x) out[x] = d.weight_probs[std::popcount(x)] / count[std::popcount(x)];
  return out;
}

// Law of the first K coordinates, as a table over {0,1}^K.
inline std::vector<Rational> marginal_table(const dualpoly::SymmetricDistribution& d, int K) {
  const auto full = per_string_table(d);
  std::vector<Rational> out(std::size_t{1} << K);
  const std::uint32_t low = (1u << K) - 1;
  for (std::uint32_t x = 0; x < full.size(); ++x) out[x & low] += full[x];
  return out;
}

// Marginal on the first K bits aggregated by weight.
inline std::vector<Rational> marginal_by_weight(const dualpoly::SymmetricDistribution& d, int K) {
  const auto table = marginal_table(d, K);
  std::vector<Rational> out(K + 1);
  for (std::uint32_t x = 0; x < table.size(); ++x) out[std::popcount(x)] += table[x];
  return out;
}

// Marginals on every k-subset of coordinates agree (full enumeration).
inline bool all_k_marginals_agree(const std::vector<Rational>& p1, const std::vector<Rational>& p2, int n, int k) {
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) != k) continue;
    std::vector<Rational> m1(std::size_t{1} << n), m2(std::size_t{1} << n);
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
      m1[x & s] += p1[x];
      m2[x & s] += p2[x];
    }
    if (m1 != m2) return false;
  }
  return true;
}

// max over all 2^(2^K) tests T of |P1(T) - P2(T)| on K-bit tables.
inline Rational best_test_advantage(const std::vector<Rational>& p1, const std::vector<Rational>& p2) {
  const std::size_t points = p1.size();
  if (points > 16) throw std::invalid_argument("best_test_advantage: at most 4 bits");
  Rational best = 0;
  for (std::uint32_t test = 0; test < (1u << points); ++test) {
    Rational adv = 0;
    for (std::size_t x = 0; x < points; ++x)
      if ((test >> x) & 1u) adv += p1[x] - p2[x];
    if (adv < 0) adv = -adv;
    if (adv > best) best = adv;
  }
  return best;
}

// E_{|x| = h} f(x) over {0,1}^n by enumeration.
inline std::vector<Rational> weight_averages(int n, const std::function<Rational(std::uint32_t)>& f) {
  std::vector<Rational> sum(n + 1);
  std::vector<int> count(n + 1, 0);
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    sum[std::popcount(x)] += f(x);
    ++count[std::popcount(x)];
  }
  for (int h = 0; h <= n; ++h) sum[h] /= count[h];
  return sum;
}

// Pr over strings of weight h that the first K bits have weight w, by
// counting with the additive Pascal triangle.
inline Rational first_block_probability(int n, int K, int w, int h) {
  const Integer total = pascal(n, h);
  if (total == 0) return 0;
  return dualpoly::ratio(pascal(K, w) * pascal(n - K, h - w), total);
}

// Pr_{X uniform on {-1,1}^n}[<w, X> >= d] over all sign patterns.
inline Rational threshold_probability(const dualpoly::WeightVector& w, const Rational& d) {
  const int n = w.n();
  int hits = 0;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    Rational s = 0;
    for (int i = 0; i < n; ++i) s += ((x >> i) & 1u) ? Rational(-w.w[i]) : w.w[i];
    if (s >= d) ++hits;
  }
  return dualpoly::ratio(hits, Integer(1) << n);
}

// phi(x) = chi_[n](x) c(x)^2 / (2^n |H|) with c(x) = sum_{S in H} chi_S(x),
// H = {S : w(S) <= (||w||_1 - d)/2}, by the O(4^n) route.
inline std::vector<Rational> naive_phi(const dualpoly::WeightVector& w, const Rational& d) {
  const int n = w.n();
  Rational l1 = 0;
  for (const auto& x : w.w) l1 += x;
  const Rational cut = (l1 - d) / 2;
  std::vector<std::uint32_t> H;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    Rational ws = 0;
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1u) ws += w.w[i];
    if (ws <= cut) H.push_back(s);
  }
  const std::uint32_t all = (1u << n) - 1;
  std::vector<Rational> phi(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < phi.size(); ++x) {
    long c = 0;
    for (auto s : H) c += chi(s, x);
    phi[x] = dualpoly::ratio(chi(all, x) * c * c, (Integer(1) << n) * static_cast<long>(H.size()));
  }
  return phi;
}

// Exact solution of a square rational system by Gauss-Jordan; throws on a
// singular matrix.
inline std::vector<Rational> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t m = b.size();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) throw std::domain_error("singular");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < m; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < m; ++i) b[i] /= a[i][i];
  return b;
}

// Minimax error of degree-k polynomial fitting by exhaustive search over
// reference sets: the best error equals the largest equioscillation level
// over all (k+2)-point subsets of the sorted points.
inline Rational equioscillation_error(const std::vector<Rational>& points, const std::vector<Rational>& values, int k) {
  const int m = static_cast<int>(points.size());
  const int r = k + 2;
  if (m < r) return 0;
  Rational best = 0;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    std::vector<std::vector<Rational>> a(r, std::vector<Rational>(r));
    std::vector<Rational> b(r);
    for (int i = 0; i < r; ++i) {
      Rational p = 1;
      for (int j = 0; j <= k; ++j) {
        a[i][j] = p;
        p *= points[idx[i]];
      }
      a[i][k + 1] = (i % 2) ? -1 : 1;
      b[i] = values[idx[i]];
    }
    Rational level = solve_square(a, b)[k + 1];
    if (level < 0) level = -level;
    if (level > best) best = level;
    int pos = r - 1;
    while (pos >= 0 && idx[pos] == m - r + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < r; ++i) idx[i] = idx[i - 1] + 1;
  }
  return best;
}

// Least k whose equioscillation error is <= eps on the weight grid.
inline int equioscillation_degree(const std::vector<Rational>& by_weight, const Rational& eps) {
  const int n = static_cast<int>(by_weight.size()) - 1;
  std::vector<Rational> pts(n + 1);
  for (int h = 0; h <= n; ++h) pts[h] = dualpoly::ratio(n - 2 * h, n);
  for (int k = 0; k <= n; ++k)
    if (equioscillation_error(pts, by_weight, k) <= eps) return k;
  return n;
}

// Law of the number of all-ones blocks of size t, for a symmetric input
// over t*n bits, by enumerating every placement.
inline std::vector<Rational> consolidate_by_placement(const dualpoly::SymmetricDistribution& d, int t) {
  const int bits = d.n;
  const int n = bits / t;
  const auto table = per_string_table(d);
  std::vector<Rational> out(n + 1);
  const std::uint32_t block = (1u << t) - 1;
  for (std::uint32_t x = 0; x < table.size(); ++x) {
    int full = 0;
    for (int b = 0; b < n; ++b)
      if (((x >> (b * t)) & block) == block) ++full;
    out[full] += table[x];
  }
  return out;
}

}  // namespace oracle

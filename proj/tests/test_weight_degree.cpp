#include <gtest/gtest.h>

#include "dualpoly/approx_lab.hpp"
#include "dualpoly/simplex.hpp"
#include "dualpoly/weight_degree.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dualpoly;

namespace {

std::vector<int> predicate_of(const std::vector<Rational>& by_weight) {
  std::vector<int> p;
  for (const auto& v : by_weight) p.push_back(v == 1 ? 1 : 0);
  return p;
}

// Least parity weight of a degree-K polynomial within eps of symmetric f.
// Averaging over permutations keeps error and does not raise weight, so one
// coefficient per level suffices; the level sums come from enumeration.
Rational min_weight_oracle(const std::vector<Rational>& f, int K, const Rational& eps) {
  const int n = static_cast<int>(f.size()) - 1;
  std::vector<std::vector<Rational>> level(K + 1, std::vector<Rational>(n + 1));
  for (int h = 0; h <= n; ++h) {
    const std::uint32_t x = (1u << h) - 1;
    for (std::uint32_t s = 0; s < (1u << n); ++s)
      if (std::popcount(s) <= K) level[std::popcount(s)][h] += oracle::chi(s, x);
  }
  // Variables a_j^+, a_j^- >= 0; maximize -sum C(n, j)(a_j^+ + a_j^-).
  LinearProgram lp;
  for (int j = 0; j <= K; ++j) {
    const Rational c = -Rational(oracle::pascal(n, j));
    lp.objective.push_back(c);
    lp.objective.push_back(c);
  }
  for (int h = 0; h <= n; ++h) {
    std::vector<Rational> row;
    for (int j = 0; j <= K; ++j) {
      row.push_back(level[j][h]);
      row.push_back(-level[j][h]);
    }
    lp.add_row(row, Relation::LessEq, f[h] + eps);
    lp.add_row(row, Relation::GreaterEq, f[h] - eps);
  }
  const auto s = solve_lp(lp);
  if (s.status != LPStatus::Optimal) throw std::runtime_error("min weight oracle: no feasible polynomial");
  return -s.value;
}

Rational naive_eval(const ParityPoly& p, std::uint32_t x) {
  Rational v = 0;
  for (const auto& [s, c] : p.coeffs()) v += oracle::chi(s, x) * c;
  return v;
}

}  // namespace

TEST(KF, Examples) {
  EXPECT_EQ(compute_k_f(predicate_of(and_by_weight(8))), 0);
  EXPECT_EQ(compute_k_f(predicate_of(or_by_weight(8))), 0);
  EXPECT_EQ(compute_k_f(predicate_of(exact_by_weight(12, 1))), 1);
  EXPECT_EQ(compute_k_f(predicate_of(maj_by_weight(8))), 3);
  EXPECT_EQ(compute_k_f(predicate_of(parity_by_weight(6))), 2);
  EXPECT_EQ(SymmetricSpec::from_predicate({0, 1, 1}).k_f, 0);
  EXPECT_THROW(SymmetricSpec::from_predicate({0, 2}), std::invalid_argument);
  EXPECT_THROW(SymmetricSpec::from_predicate({1}), std::invalid_argument);
}

TEST(KF, DefinitionProperty) {
  for (int n = 1; n <= 9; ++n)
    for (std::uint32_t pred = 0; pred < (1u << (n + 1)); ++pred) {
      std::vector<int> p(n + 1);
      for (int h = 0; h <= n; ++h) p[h] = (pred >> h) & 1u;
      const int k = compute_k_f(p);
      // Constant on the middle band at k; not at k - 1.
      for (int h = k + 1; h <= n - k - 1; ++h) ASSERT_EQ(p[h], p[k + 1]);
      if (k > 0) {
        bool constant = true;
        for (int h = k; h <= n - k; ++h) constant = constant && p[h] == p[k];
        ASSERT_FALSE(constant) << n << " " << pred;
      }
    }
}

TEST(InnerAnd, BlockWeightIsOne) {
  for (int b = 1; b <= 8; ++b) {
    std::vector<Rational> and_pm01(std::size_t{1} << b);
    and_pm01.back() = 1;
    const auto hat = oracle::naive_transform(and_pm01);
    Rational w = 0;
    for (const auto& c : hat) w += abs(c);
    ASSERT_EQ(w / Rational(Integer(1) << b), 1);
    ASSERT_EQ(parity_weight(ParityPoly::from_cube_values(b, and_pm01)), 1);
  }
}

TEST(ApproxEqY, ExactWhenBudgetCoversDegree) {
  const CubePoint ones{8, 0xFFu};
  const auto [p, rep] = approx_eq_y(8, ones, 8, Rational(1, 6));
  EXPECT_EQ(rep.weight, 1);
  EXPECT_EQ(rep.error, 0);
  EXPECT_EQ(rep.degree, 8);
  for (std::uint32_t x = 0; x < 256; ++x) ASSERT_EQ(naive_eval(p, x), x == 0xFFu ? 1 : 0);
}

TEST(ApproxEqY, SixteenBitsBudgetEight) {
  const CubePoint y{16, 0xFFFFu};
  const auto [p, rep] = approx_eq_y(16, y, 8, Rational(1, 6));
  EXPECT_LE(rep.degree, 8);
  EXPECT_LE(rep.error, Rational(1, 6));
  EXPECT_EQ(rep.weight, parity_weight(p));
  EXPECT_TRUE(rep.blocks == 2 || rep.blocks == 4 || rep.blocks == 8 || rep.blocks == 16);
  testgen::Gen gen(701);
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t x = static_cast<std::uint32_t>(gen.integer(0, 0xFFFF));
    const Rational v = naive_eval(p, x);
    ASSERT_LE(abs(v - Rational(x == y.mask ? 1 : 0)), Rational(1, 6));
  }
  ASSERT_LE(abs(naive_eval(p, y.mask) - 1), Rational(1, 6));
}

TEST(ApproxEqY, RetargetingPreservesWeightAndError) {
  testgen::Gen gen(702);
  const auto [p0, r0] = approx_eq_y(8, CubePoint{8, 0}, 4, Rational(1, 3));
  for (int trial = 0; trial < 10; ++trial) {
    const std::uint32_t y = static_cast<std::uint32_t>(gen.integer(0, 255));
    const auto [p, r] = approx_eq_y(8, CubePoint{8, y}, 4, Rational(1, 3));
    ASSERT_EQ(r.weight, r0.weight);
    ASSERT_EQ(r.error, r0.error);
    for (std::uint32_t x = 0; x < 256; ++x) ASSERT_EQ(p(x), p0(x ^ y));
  }
}

TEST(ApproxEqY, Errors) {
  EXPECT_THROW(approx_eq_y(8, CubePoint{7, 0}, 4, Rational(1, 3)), std::invalid_argument);
  EXPECT_THROW(approx_eq_y(8, CubePoint{8, 0}, 0, Rational(1, 3)), std::invalid_argument);
  EXPECT_THROW(approx_eq_y(17, CubePoint{17, 0}, 4, Rational(1, 3)), std::invalid_argument);
  EXPECT_THROW(approx_eq_y(8, CubePoint{8, 0}, 1, Rational(1, 100)), CertificationError);
}

TEST(Symub, AndOrExactThreshold) {
  const auto and8 = symub_construct(SymmetricSpec::from_predicate(predicate_of(and_by_weight(8))), 3, Rational(1, 3));
  EXPECT_LE(and8.second.error, Rational(1, 3));
  EXPECT_LE(and8.second.degree, 3);
  const auto or8 = symub_construct(SymmetricSpec::from_predicate(predicate_of(or_by_weight(8))), 3, Rational(1, 3));
  EXPECT_LE(or8.second.error, Rational(1, 3));
  EXPECT_LE(abs(or8.second.weight - and8.second.weight), 1);
  for (std::uint32_t x = 0; x < 256; ++x)
    ASSERT_LE(abs(or8.first(x) - Rational(x != 0 ? 1 : 0)), Rational(1, 3));
  const auto ex = symub_construct(SymmetricSpec::from_predicate(predicate_of(exact_by_weight(12, 1))), 8, Rational(1, 3));
  EXPECT_LE(ex.second.error, Rational(1, 3));
  EXPECT_LE(ex.second.degree, 8);
  for (int h = 0; h <= 12; ++h) {
    const std::uint32_t x = (1u << h) - 1;
    ASSERT_LE(abs(naive_eval(ex.first, x) - Rational(h == 1 ? 1 : 0)), Rational(1, 3));
  }
}

TEST(Symub, ConstantFunctions) {
  const auto zero = symub_construct(SymmetricSpec::from_predicate(std::vector<int>(7, 0)), 1, Rational(1, 3));
  EXPECT_EQ(zero.second.weight, 0);
  const auto one = symub_construct(SymmetricSpec::from_predicate(std::vector<int>(7, 1)), 1, Rational(1, 3));
  EXPECT_EQ(one.second.weight, 1);
  EXPECT_EQ(one.second.error, 0);
}

TEST(WeightLowerBound, UnboundedBelowCertificateDegree) {
  const auto r = minimax_lp(MinimaxInstance::on_weights(6, and_by_weight(6), 2));
  for (int K = 0; K <= 2; ++K) EXPECT_TRUE(weight_lower_bound(r.certificate, K, Rational(1, 10)).unbounded);
  const auto b = weight_lower_bound(r.certificate, 3, 0);
  EXPECT_FALSE(b.unbounded);
  EXPECT_GT(b.bound, 0);
  LPDualCertificate none;
  EXPECT_THROW(weight_lower_bound(none, 1, 0), std::invalid_argument);
}

TEST(WeightLowerBound, MaxCorrelationMatchesEnumeration) {
  const auto r = minimax_lp(MinimaxInstance::on_weights(6, and_by_weight(6), 2));
  const auto cube = r.certificate.witness->to_cube();
  Rational best = 0;
  for (std::uint32_t s = 0; s < 64; ++s) {
    if (std::popcount(s) > 3) continue;
    Rational pair = 0;
    for (std::uint32_t x = 0; x < 64; ++x) pair += cube[x] * oracle::chi(s, x);
    best = std::max(best, Rational(abs(pair)));
  }
  EXPECT_EQ(weight_lower_bound(r.certificate, 3, 0).max_correlation, best);
}

TEST(Sandwich, LowerBoundOptimumAndConstruction) {
  const int n = 6;
  const Rational eps(1, 3);
  const std::vector<std::vector<Rational>> fs{and_by_weight(n), or_by_weight(n), exact_by_weight(n, 1),
                                              maj_by_weight(n)};
  for (const auto& f : fs) {
    const int deg = approx_degree(f, eps);
    for (int K = std::max(deg, 1); K <= n; ++K) {
      const Rational opt = min_weight_oracle(f, K, eps);
      const auto [p, rep] = symub_construct(SymmetricSpec::from_predicate(predicate_of(f)), K, eps);
      ASSERT_LE(opt, rep.weight) << K;
      for (int k = 0; k < deg; ++k) {
        const auto cert = minimax_lp(MinimaxInstance::on_weights(n, f, k)).certificate;
        const auto lb = weight_lower_bound(cert, K, eps);
        if (lb.unbounded) continue;
        ASSERT_LE(lb.bound, opt) << K << " " << k;
      }
    }
  }
}

#pragma once

#include <vector>

#include "dualpoly/rational.hpp"

namespace dualpoly {

enum class Relation { LessEq, Equal, GreaterEq };

/// maximize c.x subject to rows a_i.x (rel_i) b_i and x >= 0.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<Relation> relations;
  std::vector<Rational> rhs;

  void add_row(std::vector<Rational> a, Relation rel, Rational b);
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

/// `dual` satisfies y.A >= c with y_i >= 0 on <= rows, y_i <= 0 on >= rows,
/// and b.y == value at optimality.
struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
};

/// Exact two-phase dense-tableau simplex with Bland's rule.
LPSolution solve_lp(const LinearProgram& lp);

/// min_a max_i |sum_j a_j basis[i][j] - values[i]| over a discrete point set,
/// solved through its dual. `dual_masses` psi_i satisfy sum |psi_i| = 1 (when
/// error > 0), sum_i psi_i basis[i][j] = 0 and sum_i psi_i values[i] = error.
struct DiscreteMinimax {
  std::vector<Rational> coeffs;
  Rational error;
  std::vector<Rational> dual_masses;
};

DiscreteMinimax solve_discrete_minimax(const std::vector<std::vector<Rational>>& basis,
                                       const std::vector<Rational>& values);

}  // namespace dualpoly

#include "dualpoly/simplex.hpp"

#include <stdexcept>

namespace dualpoly {

void LinearProgram::add_row(std::vector<Rational> a, Relation rel, Rational b) {
  rows.push_back(std::move(a));
  relations.push_back(rel);
  rhs.push_back(std::move(b));
}

namespace {

struct Tableau {
  std::size_t m = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Rational>> t;  // m rows of B^{-1}A
  std::vector<Rational> b;               // B^{-1}b
  std::vector<std::size_t> basis;
  std::vector<Rational> z;  // reduced costs c_B B^{-1} A_j - c_j
  Rational value;

  void pivot(std::size_t r, std::size_t c) {
    const Rational piv = t[r][c];
    for (auto& x : t[r]) x /= piv;
    b[r] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t[i][c] == 0) continue;
      const Rational f = t[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
      b[i] -= f * b[r];
    }
    if (z[c] != 0) {
      const Rational f = z[c];
      for (std::size_t j = 0; j < cols; ++j)
        if (t[r][j] != 0) z[j] -= f * t[r][j];
      value -= f * b[r];
    }
    basis[r] = c;
  }

  void price(const std::vector<Rational>& cost) {
    z.assign(cols, 0);
    value = 0;
    for (std::size_t j = 0; j < cols; ++j) z[j] = -cost[j];
    for (std::size_t i = 0; i < m; ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (t[i][j] != 0) z[j] += cb * t[i][j];
      value += cb * b[i];
    }
  }

  // Returns false when unbounded.
  bool optimize(const std::vector<bool>& allowed) {
    while (true) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols; ++j) {
        if (allowed[j] && z[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols) return true;
      std::size_t leave = m;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        Rational ratio = b[i] / t[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LPSolution solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.rows.size();
  const std::size_t nv = lp.objective.size();
  if (lp.relations.size() != m || lp.rhs.size() != m) throw std::invalid_argument("solve_lp: inconsistent row data");

  // Orient every row so the right-hand side is nonnegative.
  std::vector<int> flip(m, 1);
  std::vector<Relation> rel = lp.relations;
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.rows[i].size() != nv) throw std::invalid_argument("solve_lp: row length mismatch");
    if (lp.rhs[i] < 0) {
      flip[i] = -1;
      if (rel[i] == Relation::LessEq)
        rel[i] = Relation::GreaterEq;
      else if (rel[i] == Relation::GreaterEq)
        rel[i] = Relation::LessEq;
    }
  }

  // Columns: originals, one slack/surplus per inequality, one artificial per
  // >= or = row. `unit_col[i]` is the column that starts as e_i.
  std::size_t cols = nv;
  std::vector<std::size_t> slack_col(m, SIZE_MAX), unit_col(m);
  for (std::size_t i = 0; i < m; ++i)
    if (rel[i] != Relation::Equal) slack_col[i] = cols++;
  std::vector<bool> artificial;
  for (std::size_t i = 0; i < m; ++i) {
    if (rel[i] == Relation::LessEq)
      unit_col[i] = slack_col[i];
    else
      unit_col[i] = cols++;
  }
  artificial.assign(cols, false);
  for (std::size_t i = 0; i < m; ++i)
    if (rel[i] != Relation::LessEq) artificial[unit_col[i]] = true;

  Tableau tab;
  tab.m = m;
  tab.cols = cols;
  tab.t.assign(m, std::vector<Rational>(cols));
  tab.b.resize(m);
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) tab.t[i][j] = flip[i] * lp.rows[i][j];
    tab.b[i] = flip[i] * lp.rhs[i];
    if (rel[i] == Relation::LessEq) tab.t[i][slack_col[i]] = 1;
    if (rel[i] == Relation::GreaterEq) tab.t[i][slack_col[i]] = -1;
    tab.t[i][unit_col[i]] = 1;
    tab.basis[i] = unit_col[i];
  }

  LPSolution sol;
  std::vector<bool> allowed(cols, true);
  bool any_artificial = false;
  for (bool a : artificial) any_artificial = any_artificial || a;
  if (any_artificial) {
    std::vector<Rational> phase1(cols);
    for (std::size_t j = 0; j < cols; ++j)
      if (artificial[j]) phase1[j] = -1;
    tab.price(phase1);
    tab.optimize(allowed);
    if (tab.value < 0) {
      sol.status = LPStatus::Infeasible;
      return sol;
    }
    // Drive zero-level artificials out of the basis where possible; the
    // remaining ones sit on redundant rows and never change.
    for (std::size_t i = 0; i < m; ++i) {
      if (!artificial[tab.basis[i]]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!artificial[j] && tab.t[i][j] != 0) {
          tab.pivot(i, j);
          break;
        }
      }
    }
    for (std::size_t j = 0; j < cols; ++j)
      if (artificial[j]) allowed[j] = false;
  }

  std::vector<Rational> cost(cols);
  for (std::size_t j = 0; j < nv; ++j) cost[j] = lp.objective[j];
  tab.price(cost);
  if (!tab.optimize(allowed)) {
    sol.status = LPStatus::Unbounded;
    return sol;
  }

  sol.status = LPStatus::Optimal;
  sol.value = tab.value;
  sol.primal.assign(nv, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] < nv) sol.primal[tab.basis[i]] = tab.b[i];
  sol.dual.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    Rational y = 0;
    for (std::size_t r = 0; r < m; ++r) {
      const Rational& cb = cost[tab.basis[r]];
      if (cb != 0) y += cb * tab.t[r][unit_col[i]];
    }
    sol.dual[i] = flip[i] * y;
  }
  return sol;
}

DiscreteMinimax solve_discrete_minimax(const std::vector<std::vector<Rational>>& basis,
                                       const std::vector<Rational>& values) {
  const std::size_t m = values.size();
  if (basis.size() != m) throw std::invalid_argument("solve_discrete_minimax: basis/value size mismatch");
  if (m == 0) throw std::invalid_argument("solve_discrete_minimax: no points");
  const std::size_t k = basis.front().size();

  // Variables u_0..u_{m-1}, v_0..v_{m-1}; psi = u - v.
  LinearProgram lp;
  lp.objective.resize(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    lp.objective[i] = values[i];
    lp.objective[m + i] = -values[i];
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rational> row(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      row[i] = basis[i].at(j);
      row[m + i] = -basis[i][j];
    }
    lp.add_row(std::move(row), Relation::Equal, 0);
  }
  lp.add_row(std::vector<Rational>(2 * m, Rational(1)), Relation::LessEq, 1);

  const LPSolution sol = solve_lp(lp);
  if (sol.status != LPStatus::Optimal) throw std::logic_error("solve_discrete_minimax: LP not optimal");

  DiscreteMinimax out;
  out.coeffs.assign(sol.dual.begin(), sol.dual.begin() + static_cast<long>(k));
  out.error = sol.dual[k];
  out.dual_masses.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.dual_masses[i] = sol.primal[i] - sol.primal[m + i];

  // Audit strong duality and primal feasibility exactly.
  if (out.error != sol.value) throw CertificationError("minimax strong duality", "dual value " + to_string(sol.value));
  for (std::size_t i = 0; i < m; ++i) {
    Rational p = 0;
    for (std::size_t j = 0; j < k; ++j) p += out.coeffs[j] * basis[i][j];
    if (abs(p - values[i]) > out.error)
      throw CertificationError("minimax primal feasibility", "point " + std::to_string(i));
  }
  return out;
}

}  // namespace dualpoly

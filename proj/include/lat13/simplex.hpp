// Small dense exact-rational simplex, two-phase, Bland's rule.
//
// Solves  min c.x  s.t.  A x = b, x >= 0  over the rationals. Problem sizes
// here are tiny (a cone facet test in dimension <= 6), so a plain tableau
// with anti-cycling is all that is needed; every comparison is exact.

#pragma once

#include "lat13/rational.hpp"

#include <vector>

namespace lat13 {

struct LpProblem {
  // row-major m x n constraint matrix
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded } status;
  Rational objective;
  std::vector<Rational> x;
};

class SimplexSolver {
public:
  explicit SimplexSolver(const LpProblem& p)
      : m_(p.a.size()), n_(p.c.size()), tableau_(m_ + 1), basis_(m_) {
    // columns: n structural, m artificial, then the rhs
    const std::size_t width = n_ + m_ + 1;
    for (std::size_t i = 0; i <= m_; ++i) tableau_[i].assign(width, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = sgn(p.b[i]) < 0;
      for (std::size_t j = 0; j < n_; ++j)
        tableau_[i][j] = flip ? Rational(-p.a[i][j]) : p.a[i][j];
      tableau_[i][n_ + i] = 1;
      tableau_[i][width - 1] = flip ? Rational(-p.b[i]) : p.b[i];
      basis_[i] = n_ + i;
    }
    cost_ = p.c;
  }

  LpResult solve() {
    // phase 1: minimize the sum of artificials
    auto& obj = tableau_[m_];
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < obj.size(); ++j) obj[j] -= tableau_[i][j];
    for (std::size_t i = 0; i < m_; ++i) obj[n_ + i] = 0;
    if (!pivot_loop(n_ + m_)) return {LpResult::Status::Unbounded, 0, {}};
    if (sgn(rhs(m_)) != 0) return {LpResult::Status::Infeasible, 0, {}};
    drive_out_artificials();

    // phase 2: restore the real objective expressed in the current basis
    std::fill(obj.begin(), obj.end(), Rational(0));
    for (std::size_t j = 0; j < n_; ++j) obj[j] = cost_[j];
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) continue;
      const Rational f = obj[basis_[i]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < obj.size(); ++j) obj[j] -= f * tableau_[i][j];
    }
    if (!pivot_loop(n_)) return {LpResult::Status::Unbounded, 0, {}};

    LpResult out{LpResult::Status::Optimal, -rhs(m_), std::vector<Rational>(n_, Rational(0))};
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) out.x[basis_[i]] = rhs(i);
    return out;
  }

private:
  Rational& rhs(std::size_t row) { return tableau_[row].back(); }

  // Bland: entering is the lowest eligible column, leaving the row whose
  // basic variable has the lowest index among the minimum ratios
  bool pivot_loop(std::size_t allowed_cols) {
    while (true) {
      std::size_t enter = allowed_cols;
      for (std::size_t j = 0; j < allowed_cols; ++j) {
        if (sgn(tableau_[m_][j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed_cols) return true;
      std::size_t leave = m_;
      Rational best_ratio(0);
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(tableau_[i][enter]) <= 0) continue;
        const Rational ratio = rhs(i) / tableau_[i][enter];
        if (leave == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    auto& r = tableau_[row];
    const Rational inv = Rational(1) / r[col];
    for (auto& v : r) v *= inv;
    r[col] = 1;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const Rational f = tableau_[i][col];
      if (sgn(f) == 0) continue;
      auto& t = tableau_[i];
      for (std::size_t j = 0; j < t.size(); ++j) t[j] -= f * r[j];
      t[col] = 0;
    }
    basis_[row] = col;
  }

  // a basic artificial at level zero either pivots out on a structural
  // column or marks a redundant row
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(tableau_[i][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col < n_) {
        pivot(i, col);
      } else {
        for (auto& v : tableau_[i]) v = 0; // redundant constraint
      }
    }
  }

  std::size_t m_, n_;
  std::vector<std::vector<Rational>> tableau_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
};

inline LpResult solve_lp(const LpProblem& p) { return SimplexSolver(p).solve(); }

} // namespace lat13

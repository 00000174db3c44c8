#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "stackgov/errors.hpp"
#include "stackgov/linalg.hpp"

namespace stackgov {

inline constexpr double kLpInfinity = std::numeric_limits<double>::infinity();

/// Dense linear program
///
///   maximize   c^T x
///   subject to A_ub x <= b_ub
///              A_eq x  = b_eq
///              lower <= x <= upper   (per coordinate; +-inf allowed)
///
/// Empty constraint blocks are permitted. Bounds default to x >= 0.
struct LinearProgram {
  std::vector<double> objective;
  Matrix a_ub;
  std::vector<double> b_ub;
  Matrix a_eq;
  std::vector<double> b_eq;
  std::vector<double> lower;  // empty means all zeros
  std::vector<double> upper;  // empty means all +inf

  std::size_t num_vars() const { return objective.size(); }

  void validate() const {
    const std::size_t n = num_vars();
    if (n == 0) throw InvalidArgument("LinearProgram: no variables");
    auto check_block = [n](const Matrix& a, const std::vector<double>& b,
                           const char* name) {
      if (a.rows() != b.size())
        throw InvalidArgument(std::string("LinearProgram: ") + name +
                              " rows do not match bounds");
      if (!a.empty() && a.cols() != n)
        throw InvalidArgument(std::string("LinearProgram: ") + name +
                              " column count does not match variables");
      if (!a.all_finite())
        throw InvalidArgument(std::string("LinearProgram: non-finite entry in ") +
                              name);
      for (double v : b)
        if (!std::isfinite(v))
          throw InvalidArgument(std::string("LinearProgram: non-finite bound in ") +
                                name);
    };
    check_block(a_ub, b_ub, "A_ub");
    check_block(a_eq, b_eq, "A_eq");
    for (double v : objective)
      if (!std::isfinite(v))
        throw InvalidArgument("LinearProgram: non-finite objective coefficient");
    if (!lower.empty() && lower.size() != n)
      throw InvalidArgument("LinearProgram: lower bound size mismatch");
    if (!upper.empty() && upper.size() != n)
      throw InvalidArgument("LinearProgram: upper bound size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
      const double lo = lower.empty() ? 0.0 : lower[i];
      const double hi = upper.empty() ? kLpInfinity : upper[i];
      if (std::isnan(lo) || std::isnan(hi) || lo > hi)
        throw InvalidArgument("LinearProgram: inconsistent variable bounds");
    }
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  std::vector<double> solution;  // in the original variables
  double objective = 0.0;
  LpStatus status = LpStatus::Infeasible;
  int pivots = 0;
};

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

namespace detail {

// Standard-form tableau: maximize c^T x, A x = b, x >= 0, b >= 0.
// Two phases, entering/leaving picked by Bland's rule so cycling cannot
// occur. Problem sizes here are tiny, so no factorization updates.
class SimplexTableau {
 public:
  SimplexTableau(const Matrix& a, const std::vector<double>& b,
                 const std::vector<double>& c, double tol)
      : m_(a.rows()), n_(a.cols()), tol_(tol), tab_(m_ + 1, n_ + m_ + 1),
        basis_(m_) {
    // [A | I | b] with artificial basis; phase-one cost row below.
    for (std::size_t i = 0; i < m_; ++i) {
      const double sign = b[i] < 0.0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < n_; ++j) tab_(i, j) = sign * a(i, j);
      tab_(i, n_ + i) = 1.0;
      tab_(i, n_ + m_) = sign * b[i];
      basis_[i] = n_ + i;
    }
    cost_ = c;
  }

  // Returns false when phase one ends with positive residual (infeasible).
  bool phase_one(int& pivots) {
    // Minimize sum of artificials: row = -sum of constraint rows over
    // artificial columns' coefficients.
    std::vector<double> z(n_ + m_ + 1, 0.0);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j <= n_ + m_; ++j) z[j] += tab_(i, j);
    for (std::size_t j = 0; j <= n_ + m_; ++j) tab_(m_, j) = z[j];
    for (std::size_t j = n_; j < n_ + m_; ++j) tab_(m_, j) = 0.0;

    run(/*restrict_artificials=*/false, pivots);
    if (tab_(m_, n_ + m_) > tol_) return false;

    // Pivot any artificial variable still basic out of the basis (its
    // value is zero); if its row is all zeros in original columns the row
    // is redundant and stays put harmlessly.
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (std::fabs(tab_(i, j)) > tol_) {
          pivot(i, j);
          ++pivots;
          break;
        }
      }
    }
    return true;
  }

  // Returns false when the objective is unbounded above.
  bool phase_two(int& pivots) {
    // Reduced costs for maximizing c: row m_ holds -c adjusted by basis.
    for (std::size_t j = 0; j <= n_ + m_; ++j) tab_(m_, j) = 0.0;
    for (std::size_t j = 0; j < n_; ++j) tab_(m_, j) = -cost_[j];
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) continue;
      const double cb = cost_[basis_[i]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= n_ + m_; ++j)
        tab_(m_, j) += cb * tab_(i, j);
    }
    return run(/*restrict_artificials=*/true, pivots);
  }

  std::vector<double> extract(void) const {
    std::vector<double> x(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = tab_(i, n_ + m_);
    return x;
  }

  double objective_value() const { return tab_(m_, n_ + m_); }

 private:
  bool run(bool restrict_artificials, int& pivots) {
    const std::size_t limit = restrict_artificials ? n_ : n_ + m_;
    for (;;) {
      // Bland: lowest-index column with negative reduced cost.
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (tab_(m_, j) < -tol_) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;  // optimal

      std::size_t leave = m_;
      double best_ratio = 0.0;
      for (std::size_t i = 0; i < m_; ++i) {
        if (tab_(i, enter) <= tol_) continue;
        const double ratio = tab_(i, n_ + m_) / tab_(i, enter);
        if (leave == m_ || ratio < best_ratio - tol_ ||
            (std::fabs(ratio - best_ratio) <= tol_ && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m_) return false;  // unbounded
      pivot(leave, enter);
      ++pivots;
    }
  }

  void pivot(std::size_t r, std::size_t s) {
    const double inv = 1.0 / tab_(r, s);
    for (std::size_t j = 0; j <= n_ + m_; ++j) tab_(r, j) *= inv;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const double f = tab_(i, s);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= n_ + m_; ++j) tab_(i, j) -= f * tab_(r, j);
    }
    basis_[r] = s;
  }

  std::size_t m_, n_;
  double tol_;
  Matrix tab_;
  std::vector<std::size_t> basis_;
  std::vector<double> cost_;
};

}  // namespace detail

/// Solves the LP by dense two-phase simplex with Bland's rule.
///
/// Bounded/free variables are reduced to standard form first: finite
/// lower bounds are shifted out, free variables split into x+ - x-, and
/// finite upper bounds become inequality rows. Inequalities gain slacks.
inline LpResult solve_lp(const LinearProgram& lp, double tol = 1e-9) {
  lp.validate();
  const std::size_t n = lp.num_vars();

  // Per-variable transform: x = shift + pos - neg (neg only for free vars).
  struct VarMap {
    double shift = 0.0;
    bool free_var = false;
  };
  std::vector<VarMap> vars(n);
  std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = lp.lower.empty() ? 0.0 : lp.lower[i];
    pos_col[i] = cols++;
    if (std::isfinite(lo)) {
      vars[i].shift = lo;
    } else {
      vars[i].free_var = true;
      neg_col[i] = cols++;
    }
  }

  std::size_t rows = lp.a_ub.rows() + lp.a_eq.rows();
  for (std::size_t i = 0; i < n; ++i) {
    const double hi = lp.upper.empty() ? kLpInfinity : lp.upper[i];
    if (std::isfinite(hi)) ++rows;
  }
  const std::size_t n_ub = lp.a_ub.rows();
  const std::size_t n_eq = lp.a_eq.rows();
  const std::size_t n_slack = rows - n_eq;  // every non-equality row gets one

  Matrix a(rows, cols + n_slack);
  std::vector<double> b(rows, 0.0);
  std::vector<double> c(cols + n_slack, 0.0);
  double obj_shift = 0.0;

  auto emit = [&](std::size_t row, std::size_t var, double coeff) {
    a(row, pos_col[var]) += coeff;
    if (vars[var].free_var) a(row, neg_col[var]) -= coeff;
  };

  std::size_t row = 0;
  std::size_t slack = cols;
  for (std::size_t r = 0; r < n_ub; ++r, ++row) {
    double rhs = lp.b_ub[r];
    for (std::size_t i = 0; i < n; ++i) {
      emit(row, i, lp.a_ub(r, i));
      rhs -= lp.a_ub(r, i) * vars[i].shift;
    }
    a(row, slack++) = 1.0;
    b[row] = rhs;
  }
  for (std::size_t r = 0; r < n_eq; ++r, ++row) {
    double rhs = lp.b_eq[r];
    for (std::size_t i = 0; i < n; ++i) {
      emit(row, i, lp.a_eq(r, i));
      rhs -= lp.a_eq(r, i) * vars[i].shift;
    }
    b[row] = rhs;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double hi = lp.upper.empty() ? kLpInfinity : lp.upper[i];
    if (!std::isfinite(hi)) continue;
    emit(row, i, 1.0);
    a(row, slack++) = 1.0;
    b[row] = hi - vars[i].shift;
    ++row;
  }
  for (std::size_t i = 0; i < n; ++i) {
    c[pos_col[i]] = lp.objective[i];
    if (vars[i].free_var) c[neg_col[i]] = -lp.objective[i];
    obj_shift += lp.objective[i] * vars[i].shift;
  }

  detail::SimplexTableau tableau(a, b, c, tol);
  LpResult result;
  if (!tableau.phase_one(result.pivots)) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  if (!tableau.phase_two(result.pivots)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  const auto y = tableau.extract();
  result.solution.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double v = vars[i].shift + y[pos_col[i]];
    if (vars[i].free_var) v -= y[neg_col[i]];
    result.solution[i] = v;
  }
  result.objective = tableau.objective_value() + obj_shift;
  result.status = LpStatus::Optimal;
  return result;
}

/// Replays a claimed-optimal solution against every constraint of `lp`;
/// true when all hold within `tol`. Used as an independent feasibility
/// check on solver output.
inline bool lp_solution_feasible(const LinearProgram& lp,
                                 const std::vector<double>& x, double tol) {
  if (x.size() != lp.num_vars()) return false;
  for (std::size_t r = 0; r < lp.a_ub.rows(); ++r) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += lp.a_ub(r, i) * x[i];
    if (s > lp.b_ub[r] + tol) return false;
  }
  for (std::size_t r = 0; r < lp.a_eq.rows(); ++r) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += lp.a_eq(r, i) * x[i];
    if (std::fabs(s - lp.b_eq[r]) > tol) return false;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lo = lp.lower.empty() ? 0.0 : lp.lower[i];
    const double hi = lp.upper.empty() ? kLpInfinity : lp.upper[i];
    if (x[i] < lo - tol || x[i] > hi + tol) return false;
  }
  return true;
}

}  // namespace stackgov

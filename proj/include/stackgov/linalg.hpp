#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <vector>

#include "stackgov/errors.hpp"

namespace stackgov {

/// Dense row-major matrix of doubles. Sized for the small systems this
/// library works with (payoff tables, follower Hessians); no attempt at
/// cache blocking or sparsity.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Builds from nested braces: Matrix{{1, 2}, {3, 4}}.
  Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InvalidArgument("Matrix: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<double>& data() const { return data_; }

  bool all_finite() const {
    for (double v : data_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

namespace detail {

inline double one_norm(const Matrix& m) {
  double best = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += std::fabs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

}  // namespace detail

/// Solves A x = b by Gaussian elimination with partial pivoting.
/// Throws SingularSystem when no pivot above `pivot_tol` can be found.
inline std::vector<double> solve_linear(Matrix a, std::vector<double> b,
                                        double pivot_tol = 1e-12) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n)
    throw InvalidArgument("solve_linear: dimension mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(a(i, k)) > std::fabs(a(p, k))) p = i;
    if (std::fabs(a(p, k)) <= pivot_tol)
      throw SingularSystem("solve_linear: singular pivot at column " +
                           std::to_string(k));
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      std::swap(b[p], b[k]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= a(ii, j) * x[j];
    x[ii] = s / a(ii, ii);
  }
  return x;
}

/// Explicit inverse via column-wise solves. Small matrices only.
inline Matrix invert(const Matrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw InvalidArgument("invert: matrix not square");
  Matrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    const auto col = solve_linear(a, e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

/// 1-norm condition estimate ||A||_1 * ||A^-1||_1; infinity when singular.
inline double condition_1norm(const Matrix& a) {
  try {
    return detail::one_norm(a) * detail::one_norm(invert(a));
  } catch (const SingularSystem&) {
    return std::numeric_limits<double>::infinity();
  }
}

}  // namespace stackgov

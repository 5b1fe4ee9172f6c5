#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "levelmat/errors.hpp"
#include "levelmat/rational.hpp"

namespace levelmat {

/// Dense row-major matrix over an exact scalar (Int or Rat).
template <typename T>
class Mat {
 public:
  Mat(std::size_t rows, std::size_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (rows == 0 || cols == 0)
      throw dimension_error("Mat: dimensions must be positive");
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  std::vector<T> apply(const std::vector<T>& x) const {
    if (x.size() != cols_) throw dimension_error("Mat::apply: length mismatch");
    std::vector<T> y(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

inline RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
  return r;
}

/// Exact determinant by fraction-free (Bareiss) elimination. Every
/// intermediate division is exact, so values stay integral and bounded by
/// minors of the input instead of blowing up as free-form rationals.
inline Int det(const IntMat& m) {
  if (m.rows() != m.cols()) throw dimension_error("det: matrix not square");
  const std::size_t n = m.rows();
  IntMat a = m;
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return Int(0);
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a.at(k, j), a.at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

/// Rank over the rationals by exact Gaussian elimination.
inline std::size_t rank_of(const RatMat& m) {
  RatMat a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a.at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    for (std::size_t j = 0; j < cols; ++j)
      std::swap(a.at(rank, j), a.at(pivot, j));
    const Rat p = a.at(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a.at(i, col) == 0) continue;
      const Rat f = a.at(i, col) / p;
      for (std::size_t j = col; j < cols; ++j)
        a.at(i, j) -= f * a.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rank_of(const IntMat& m) { return rank_of(to_rat(m)); }

/// Exact solution of M x = b for square invertible M.
/// Throws singular_error when M is singular; callers enumerating basic
/// feasible solutions interpret that as "no BFS for this index set".
inline RatVec solve(const RatMat& m, const RatVec& b) {
  if (m.rows() != m.cols()) throw dimension_error("solve: matrix not square");
  if (b.size() != m.rows()) throw dimension_error("solve: rhs length mismatch");
  const std::size_t n = m.rows();
  RatMat a = m;
  RatVec rhs = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a.at(pivot, k) == 0) ++pivot;
    if (pivot == n) throw singular_error("solve: singular matrix");
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      std::swap(rhs[k], rhs[pivot]);
    }
    const Rat p = a.at(k, k);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a.at(i, k) == 0) continue;
      const Rat f = a.at(i, k) / p;
      for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      rhs[i] -= f * rhs[k];
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / a.at(i, i);
  return x;
}

struct IntegerScaling {
  Int r;          // least positive integer with r*x integral
  IntVec scaled;  // r*x
};

/// Finds the least positive r with r*x integral (the lcm of the
/// denominators, since every entry is stored in lowest terms).
inline IntegerScaling scale_to_integer(const RatVec& x) {
  Int r(1);
  for (const Rat& v : x) r = int_lcm(r, rat_den(v));
  IntVec scaled(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    scaled[i] = rat_num(x[i]) * (r / rat_den(x[i]));
  return {std::move(r), std::move(scaled)};
}

}  // namespace levelmat

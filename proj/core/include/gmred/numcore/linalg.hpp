#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "gmred/numcore/dual.hpp"
#include "gmred/numcore/errors.hpp"

namespace gmred {

/// Dense row-major matrix over double or (nested) dual scalars.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), d_(rows * cols, T(0.0)) {}

  static Mat zero(int rows, int cols) { return Mat(rows, cols); }
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1.0);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return d_[i * cols_ + j]; }
  const T& operator()(int i, int j) const { return d_[i * cols_ + j]; }

  Mat transposed() const {
    Mat m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> d_;
};

template <class T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) throw UsageError("matrix product shape mismatch");
  Mat<T> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k)
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

template <class T>
std::vector<T> operator*(const Mat<T>& a, const std::vector<T>& v) {
  if (a.cols() != static_cast<int>(v.size()))
    throw UsageError("matrix-vector shape mismatch");
  std::vector<T> out(a.rows(), T(0.0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

/// Solve A x = rhs by LU with partial pivoting.  Pivoting compares the
/// scalar (deepest value) magnitude so the same elimination order is used
/// at every dual depth.
template <class T>
std::vector<T> lu_solve(Mat<T> a, std::vector<T> rhs) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(rhs.size()) != n)
    throw UsageError("lu_solve expects a square system");
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(value(a(k, k)));
    for (int i = k + 1; i < n; ++i) {
      double m = std::abs(value(a(i, k)));
      if (m > best) {
        best = m;
        piv = i;
      }
    }
    if (!(best > 0.0) || !std::isfinite(best))
      throw DegeneracyError("singular matrix in lu_solve");
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(rhs[k], rhs[piv]);
    }
    for (int i = k + 1; i < n; ++i) {
      T f = a(i, k) / a(k, k);
      for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      rhs[i] -= f * rhs[k];
    }
  }
  std::vector<T> x(n, T(0.0));
  for (int i = n - 1; i >= 0; --i) {
    T s = rhs[i];
    for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

template <class T>
Mat<T> lu_inverse(const Mat<T>& a) {
  const int n = a.rows();
  if (a.cols() != n) throw UsageError("lu_inverse expects a square matrix");
  Mat<T> inv(n, n);
  for (int c = 0; c < n; ++c) {
    std::vector<T> e(n, T(0.0));
    e[c] = T(1.0);
    auto col = lu_solve(a, e);
    for (int r = 0; r < n; ++r) inv(r, c) = col[r];
  }
  return inv;
}

}  // namespace gmred

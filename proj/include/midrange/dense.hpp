#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "midrange/errors.hpp"

namespace midrange {

// Square dense matrix, row-major. The mutable workhorse behind the
// immutable symmetric/SPD types.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  // Row-major initializer, e.g. Matrix::from_rows({{2,1},{1,2}}).
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t n = rows.size();
    Matrix m(n);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n) throw DimensionError("from_rows: ragged initializer");
      std::size_t j = 0;
      for (double v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  std::size_t dim() const { return n_; }

  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  const std::vector<double>& data() const { return a_; }
  std::vector<double>& data() { return a_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

inline void check_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw DimensionError(std::string(where) + ": dimension mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  check_same_dim(a.dim(), b.dim(), "operator+");
  Matrix r(a.dim());
  for (std::size_t k = 0; k < r.data().size(); ++k) r.data()[k] = a.data()[k] + b.data()[k];
  return r;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
  check_same_dim(a.dim(), b.dim(), "operator-");
  Matrix r(a.dim());
  for (std::size_t k = 0; k < r.data().size(); ++k) r.data()[k] = a.data()[k] - b.data()[k];
  return r;
}

inline Matrix operator*(double s, const Matrix& a) {
  Matrix r(a.dim());
  for (std::size_t k = 0; k < r.data().size(); ++k) r.data()[k] = s * a.data()[k];
  return r;
}

// r = a * b, ikj loop order.
inline Matrix matmul(const Matrix& a, const Matrix& b) {
  check_same_dim(a.dim(), b.dim(), "matmul");
  const std::size_t n = a.dim();
  Matrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

inline Matrix transpose(const Matrix& a) {
  const std::size_t n = a.dim();
  Matrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(j, i) = a(i, j);
  return r;
}

inline double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (double v : a.data()) s += v * v;
  return std::sqrt(s);
}

inline double max_abs(const Matrix& a) {
  double m = 0.0;
  for (double v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

inline bool all_finite(const Matrix& a) {
  for (double v : a.data())
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace midrange

#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "midrange/dense.hpp"
#include "midrange/errors.hpp"

namespace midrange {

// Real symmetric matrix. Symmetrized on construction ((M + M^T)/2), so
// entries (i,j) and (j,i) are bitwise equal afterwards; all entries finite.
// Immutable once built.
class SymMatrix {
 public:
  SymMatrix() = default;

  explicit SymMatrix(Matrix m) : m_(std::move(m)) {
    if (!all_finite(m_)) throw DomainError("SymMatrix: non-finite entry");
    const std::size_t n = m_.dim();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double v = 0.5 * (m_(i, j) + m_(j, i));
        m_(i, j) = v;
        m_(j, i) = v;
      }
    }
  }

  static SymMatrix zero(std::size_t n) { return SymMatrix(Matrix(n)); }

  static SymMatrix identity(std::size_t n) { return SymMatrix(Matrix::identity(n)); }

  static SymMatrix diagonal(const std::vector<double>& d) {
    Matrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return SymMatrix(std::move(m));
  }

  static SymMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    return SymMatrix(Matrix::from_rows(rows));
  }

  std::size_t dim() const { return m_.dim(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

inline SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  return SymMatrix(a.matrix() + b.matrix());
}

inline SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
  return SymMatrix(a.matrix() - b.matrix());
}

inline SymMatrix operator*(double s, const SymMatrix& a) { return SymMatrix(s * a.matrix()); }

inline double frobenius_norm(const SymMatrix& a) { return frobenius_norm(a.matrix()); }

// x^T s x as a quadratic form helper.
inline double quadratic_form(const SymMatrix& s, const std::vector<double>& x) {
  const std::size_t n = s.dim();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) acc += x[i] * s(i, j) * x[j];
  return acc;
}

}  // namespace midrange

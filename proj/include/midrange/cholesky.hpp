#pragma once

#include <cmath>
#include <cstddef>

#include "midrange/dense.hpp"
#include "midrange/errors.hpp"
#include "midrange/sym_matrix.hpp"

namespace midrange {

// Lower-triangular L with m = L L^T. Throws NotPositiveDefinite when a
// pivot drops to or below zero.
inline Matrix cholesky_factor(const SymMatrix& m) {
  const std::size_t n = m.dim();
  Matrix l(n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = m(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
    if (!(diag > 0.0)) throw NotPositiveDefinite("cholesky: nonpositive pivot");
    l(j, j) = std::sqrt(diag);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

// X = L^{-1} B for lower-triangular L (columnwise forward substitution).
inline Matrix forward_solve(const Matrix& l, const Matrix& b) {
  check_same_dim(l.dim(), b.dim(), "forward_solve");
  const std::size_t n = l.dim();
  Matrix x = b;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = x(i, j);
      for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * x(k, j);
      x(i, j) = s / l(i, i);
    }
  }
  return x;
}

// X = L^{-T} B for lower-triangular L (backward substitution with L^T).
inline Matrix backward_solve_transposed(const Matrix& l, const Matrix& b) {
  check_same_dim(l.dim(), b.dim(), "backward_solve_transposed");
  const std::size_t n = l.dim();
  Matrix x = b;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t ii = n; ii-- > 0;) {
      double s = x(ii, j);
      for (std::size_t k = ii + 1; k < n; ++k) s -= l(k, ii) * x(k, j);
      x(ii, j) = s / l(ii, ii);
    }
  }
  return x;
}

// W = L^{-1} B L^{-T}, symmetrized. Congruence by the inverse Cholesky
// factor; W shares its spectrum with B A^{-1} when A = L L^T.
inline SymMatrix cholesky_congruence(const Matrix& l, const SymMatrix& b) {
  check_same_dim(l.dim(), b.dim(), "cholesky_congruence");
  const Matrix c = forward_solve(l, b.matrix());       // C = L^{-1} B
  const Matrix ct = forward_solve(l, transpose(c));    // (L^{-1} C^T) = W^T
  return SymMatrix(ct);                                // symmetrization absorbs roundoff
}

}  // namespace midrange

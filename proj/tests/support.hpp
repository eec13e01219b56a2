#pragma once

#include <cmath>
#include <vector>

#include "midrange/midrange.hpp"

// Shared helpers for the unit and acceptance suites.
namespace support {

using namespace midrange;

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

inline double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
  return max_abs_diff(a.matrix(), b.matrix());
}

inline double max_abs_diff(const SpdMatrix& a, const SpdMatrix& b) {
  return max_abs_diff(a.matrix(), b.matrix());
}

inline double rel_frobenius_diff(const Matrix& a, const Matrix& b) {
  const double denom = std::max(frobenius_norm(a), 1e-300);
  return frobenius_norm(a - b) / denom;
}

// b = a + PSD bump, guaranteeing a <= b in the semidefinite order.
inline SpdMatrix ordered_above(Rng& rng, const SpdMatrix& a, double scale = 1.0) {
  return SpdMatrix(a.sym() + random_psd(rng, a.dim(), scale));
}

// Congruence X A X^T by an invertible X (stays SPD).
inline SpdMatrix congruence(const Matrix& x, const SpdMatrix& a) {
  return SpdMatrix(SymMatrix(matmul(matmul(x, a.matrix()), transpose(x))));
}

}  // namespace support

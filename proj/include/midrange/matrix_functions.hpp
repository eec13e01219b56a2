#pragma once

#include <cmath>

#include "midrange/eig.hpp"
#include "midrange/spd_matrix.hpp"

namespace midrange {

// Spectral matrix functions V f(diag(lambda)) V^T on SPD inputs. log lands
// in the symmetric matrices; sqrt / inv_sqrt / pow stay inside the cone and
// return re-validated SpdMatrix values.

inline SymMatrix matrix_log(const SpdMatrix& m) {
  return spectral_apply(m.eig(), [](double l) { return std::log(l); });
}

inline SpdMatrix matrix_sqrt(const SpdMatrix& m) {
  return SpdMatrix(spectral_apply(m.eig(), [](double l) { return std::sqrt(l); }));
}

inline SpdMatrix matrix_inv_sqrt(const SpdMatrix& m) {
  return SpdMatrix(spectral_apply(m.eig(), [](double l) { return 1.0 / std::sqrt(l); }));
}

inline SpdMatrix matrix_pow(const SpdMatrix& m, double t) {
  return SpdMatrix(spectral_apply(m.eig(), [t](double l) { return std::pow(l, t); }));
}

inline SpdMatrix spd_inverse(const SpdMatrix& m) { return matrix_pow(m, -1.0); }

}  // namespace midrange

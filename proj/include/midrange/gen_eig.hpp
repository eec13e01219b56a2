#pragma once

#include <algorithm>
#include <vector>

#include "midrange/cholesky.hpp"
#include "midrange/eig.hpp"
#include "midrange/spd_matrix.hpp"

namespace midrange {

// Generalized eigenvalues of the pencil (B, A), i.e. the spectrum of
// B A^{-1}. Computed from W = L^{-1} B L^{-T} with A = L L^T, which is
// similar to B A^{-1}; A^{-1} is never formed.

// (lambda_min, lambda_max) of B A^{-1}; both strictly positive for SPD inputs.
inline ExtremeEigenvalues gen_eig_extremes(const SpdMatrix& a, const SpdMatrix& b) {
  check_same_dim(a.dim(), b.dim(), "gen_eig_extremes");
  return sym_extreme_eigenvalues(cholesky_congruence(a.chol(), b.sym()));
}

// Full spectrum of B A^{-1}, ascending.
inline std::vector<double> gen_eig_all(const SpdMatrix& a, const SpdMatrix& b) {
  check_same_dim(a.dim(), b.dim(), "gen_eig_all");
  std::vector<double> ev = eig_sym(cholesky_congruence(a.chol(), b.sym())).eigenvalues;
  std::reverse(ev.begin(), ev.end());
  return ev;
}

}  // namespace midrange

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "midrange/errors.hpp"
#include "midrange/gen_eig.hpp"
#include "midrange/matrix_functions.hpp"
#include "midrange/metrics.hpp"
#include "midrange/spd_matrix.hpp"
#include "midrange/tolerances.hpp"

namespace midrange {

enum class GeodesicKind {
  riemannian,  // A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}
  nussbaum,    // projective straight line through the cone
};

namespace detail {

// Riemannian geodesic evaluated without validating intermediates; one
// fresh eigensolve beyond the cached eig(A).
inline SymMatrix riemannian_geodesic_raw(const SpdMatrix& a, const SpdMatrix& b, double t) {
  const EigDecomposition& ea = a.eig();
  const SymMatrix root = spectral_apply(ea, [](double l) { return std::sqrt(l); });
  const SymMatrix iroot = spectral_apply(ea, [](double l) { return 1.0 / std::sqrt(l); });
  const SymMatrix mid = SymMatrix(matmul(matmul(iroot.matrix(), b.matrix()), iroot.matrix()));
  const SymMatrix powed = spectral_apply(eig_sym(mid), [t](double l) { return std::pow(l, t); });
  return SymMatrix(matmul(matmul(root.matrix(), powed.matrix()), root.matrix()));
}

}  // namespace detail

// Point at parameter t of a minimal Thompson-metric geodesic from a to b.
// Both kinds hit the endpoints exactly and return validated SPD values.
inline SpdMatrix geodesic_point(const SpdMatrix& a, const SpdMatrix& b, double t,
                                GeodesicKind kind) {
  check_same_dim(a.dim(), b.dim(), "geodesic_point");
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("geodesic_point: t outside [0,1]");
  if (kind == GeodesicKind::riemannian) {
    return SpdMatrix(detail::riemannian_geodesic_raw(a, b, t));
  }
  const ExtremeEigenvalues ex = gen_eig_extremes(a, b);
  const double lmin = ex.min;
  const double lmax = ex.max;
  if (std::abs(lmax - lmin) <= tol::branch * lmax) {
    // B A^{-1} is a multiple of the identity: straight scaling of a.
    return SpdMatrix(std::pow(lmin, t) * a.sym());
  }
  const double cb = (std::pow(lmax, t) - std::pow(lmin, t)) / (lmax - lmin);
  const double ca = (lmax * std::pow(lmin, t) - lmin * std::pow(lmax, t)) / (lmax - lmin);
  return SpdMatrix(cb * b.sym() + ca * a.sym());
}

// Matrix geometric mean A#B: midpoint of the Riemannian geodesic, and a
// metric midpoint for every member of the affine-invariant family.
inline SpdMatrix geometric_mean(const SpdMatrix& a, const SpdMatrix& b) {
  check_same_dim(a.dim(), b.dim(), "geometric_mean");
  return SpdMatrix(detail::riemannian_geodesic_raw(a, b, 0.5));
}

// Thompson-metric midpoint A*B = (B + sqrt(lmin lmax) A) / (sqrt(lmin) + sqrt(lmax))
// with (lmin, lmax) the extreme eigenvalues of B A^{-1}. The formula also
// covers the coincident-eigenvalue case.
inline SpdMatrix star_midpoint(const SpdMatrix& a, const SpdMatrix& b) {
  check_same_dim(a.dim(), b.dim(), "star_midpoint");
  const ExtremeEigenvalues ex = gen_eig_extremes(a, b);
  const double denom = std::sqrt(ex.min) + std::sqrt(ex.max);
  return SpdMatrix((1.0 / denom) * (b.sym() + std::sqrt(ex.min * ex.max) * a.sym()));
}

// Another Thompson-metric midpoint, proportional to A+B; the coefficient
// branches on lmin*lmax vs 1 (at equality both branches are midpoints).
inline SpdMatrix diamond_midpoint(const SpdMatrix& a, const SpdMatrix& b) {
  check_same_dim(a.dim(), b.dim(), "diamond_midpoint");
  const ExtremeEigenvalues ex = gen_eig_extremes(a, b);
  const double coeff = (ex.min * ex.max >= 1.0) ? std::sqrt(ex.max) / (1.0 + ex.max)
                                                : std::sqrt(ex.min) / (1.0 + ex.min);
  return SpdMatrix(coeff * (a.sym() + b.sym()));
}

// Closed-form spectrum of I*Sigma: (lambda_i + sqrt(lmin lmax)) / (sqrt(lmin)
// + sqrt(lmax)), descending to match eig_sym order. The extremes reduce to
// sqrt(lmin(Sigma)) and sqrt(lmax(Sigma)).
inline std::vector<double> star_eigenvalues_identity(const SpdMatrix& sigma) {
  const std::vector<double>& ev = sigma.eig().eigenvalues;
  const double lmin = ev.back();
  const double lmax = ev.front();
  const double shift = std::sqrt(lmin * lmax);
  const double denom = std::sqrt(lmin) + std::sqrt(lmax);
  std::vector<double> out(ev.size());
  for (std::size_t k = 0; k < ev.size(); ++k) out[k] = (ev[k] + shift) / denom;
  return out;
}

struct MidpointCheck {
  bool ok;
  double residual_a;  // |d(a,m) - d(a,b)/2|
  double residual_b;  // |d(m,b) - d(a,b)/2|
};

// Does m sit halfway between a and b in the given metric?
inline MidpointCheck check_midpoint(const SpdMatrix& a, const SpdMatrix& b, const SpdMatrix& m,
                                    const MetricKind& kind, double tolerance) {
  const double half = 0.5 * dist(a, b, kind);
  const double ra = std::abs(dist(a, m, kind) - half);
  const double rb = std::abs(dist(m, b, kind) - half);
  return {ra <= tolerance && rb <= tolerance, ra, rb};
}

}  // namespace midrange

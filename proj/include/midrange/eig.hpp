#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "midrange/dense.hpp"
#include "midrange/errors.hpp"
#include "midrange/sym_matrix.hpp"
#include "midrange/tolerances.hpp"

namespace midrange {

// Full spectral decomposition of a real symmetric matrix.
// eigenvalues sorted descending; eigenvectors(:,k) pairs with eigenvalues[k].
struct EigDecomposition {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
};

namespace detail {

inline double off_diagonal_norm(const Matrix& a) {
  const std::size_t n = a.dim();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
  return std::sqrt(2.0 * s);
}

}  // namespace detail

// Cyclic Jacobi with the stable (tau) rotation updates. Stops when the
// off-diagonal Frobenius norm drops below jacobi_off * ||m||_F; throws
// NumericalFailure if the sweep cap is hit first.
inline EigDecomposition eig_sym(const SymMatrix& m) {
  const std::size_t n = m.dim();
  Matrix a = m.matrix();
  Matrix v = Matrix::identity(n);
  const double norm = frobenius_norm(a);
  const double stop = tol::jacobi_off * norm;
  const double skip = 1e-18 * norm;

  bool converged = (detail::off_diagonal_norm(a) <= stop);
  for (int sweep = 0; sweep < tol::jacobi_max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= skip) continue;
        const double theta = 0.5 * (a(q, q) - a(p, p)) / apq;
        double t;
        if (std::abs(theta) > 1e154) {
          t = 0.5 / theta;  // avoid theta^2 overflow
        } else {
          t = ((theta >= 0.0) ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = a(i, p);
          const double aiq = a(i, q);
          a(i, p) = aip - s * (aiq + tau * aip);
          a(p, i) = a(i, p);
          a(i, q) = aiq + s * (aip - tau * aiq);
          a(q, i) = a(i, q);
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vip = v(i, p);
          const double viq = v(i, q);
          v(i, p) = vip - s * (viq + tau * vip);
          v(i, q) = viq + s * (vip - tau * viq);
        }
      }
    }
    converged = (detail::off_diagonal_norm(a) <= stop);
  }
  if (!converged) throw NumericalFailure("eig_sym: Jacobi sweep cap reached");

  // Sort descending; stable so equal eigenvalues keep solver output order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  EigDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

// Rebuild V f(diag(lambda)) V^T for a scalar map f over the spectrum.
template <typename F>
inline SymMatrix spectral_apply(const EigDecomposition& ed, F&& f) {
  const std::size_t n = ed.eigenvalues.size();
  std::vector<double> fl(n);
  for (std::size_t k = 0; k < n; ++k) fl[k] = f(ed.eigenvalues[k]);
  const Matrix& v = ed.eigenvectors;
  Matrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += v(i, k) * fl[k] * v(j, k);
      r(i, j) = acc;
      r(j, i) = acc;
    }
  }
  return SymMatrix(std::move(r));
}

// Frobenius projection onto the PSD cone: zero out negative eigenvalues.
inline SymMatrix clip_positive(const SymMatrix& m) {
  return spectral_apply(eig_sym(m), [](double l) { return l > 0.0 ? l : 0.0; });
}

struct ExtremeEigenvalues {
  double min;
  double max;
};

namespace detail {

// Householder reduction to tridiagonal form, eigenvalues only.
// Writes the diagonal into d and the subdiagonal into e (size n-1).
inline void tridiagonalize(const SymMatrix& m, std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = m.dim();
  Matrix a = m.matrix();
  d.assign(n, 0.0);
  e.assign(n > 0 ? n - 1 : 0, 0.0);

  std::vector<double> vh(n), p(n), u(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm2 += a(i, k) * a(i, k);
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) {
      e[k] = 0.0;
      continue;
    }
    const double x0 = a(k + 1, k);
    const double alpha = (x0 >= 0.0) ? -xnorm : xnorm;
    // v = x - alpha*e1, normalized
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      vh[i] = a(i, k);
      if (i == k + 1) vh[i] -= alpha;
      vnorm2 += vh[i] * vh[i];
    }
    const double vnorm = std::sqrt(vnorm2);
    if (vnorm == 0.0) {
      e[k] = alpha;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) vh[i] /= vnorm;

    // Trailing block update A <- A - v u^T - u v^T with u = 2(Av - (v^T A v) v).
    double kappa = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) acc += a(i, j) * vh[j];
      p[i] = acc;
      kappa += vh[i] * acc;
    }
    for (std::size_t i = k + 1; i < n; ++i) u[i] = 2.0 * (p[i] - kappa * vh[i]);
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= vh[i] * u[j] + u[i] * vh[j];

    a(k + 1, k) = alpha;
    e[k] = alpha;
  }
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
  if (n >= 2) e[n - 2] = a(n - 1, n - 2);
}

// Number of eigenvalues of the tridiagonal (d, e) strictly below x,
// via the Sturm sign count of the LDL^T pivots.
inline std::size_t sturm_count_below(const std::vector<double>& d, const std::vector<double>& e,
                                     double x) {
  constexpr double pivmin = std::numeric_limits<double>::min() * 1e16;
  std::size_t count = 0;
  double q = d[0] - x;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    q = d[i] - x - e[i - 1] * e[i - 1] / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

// Smallest x with sturm_count_below(x) >= target, located by bisection
// inside [lo, hi].
inline double sturm_bisect(const std::vector<double>& d, const std::vector<double>& e,
                           std::size_t target, double lo, double hi) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval exhausted in doubles
    if (sturm_count_below(d, e, mid) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
    const double width_tol = 1e-15 * std::max({std::abs(lo), std::abs(hi), 1e-30});
    if (hi - lo <= width_tol) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

// Extreme eigenvalues of a symmetric matrix without the full decomposition:
// Householder tridiagonalization, then Sturm-count bisection on the two
// ends of the Gershgorin interval.
inline ExtremeEigenvalues sym_extreme_eigenvalues(const SymMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) throw DimensionError("sym_extreme_eigenvalues: empty matrix");
  if (n == 1) return {m(0, 0), m(0, 0)};
  if (n == 2) {
    const double mean = 0.5 * (m(0, 0) + m(1, 1));
    const double half = 0.5 * (m(0, 0) - m(1, 1));
    const double rad = std::hypot(half, m(0, 1));
    return {mean - rad, mean + rad};
  }

  std::vector<double> d, e;
  detail::tridiagonalize(m, d, e);

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < n ? std::abs(e[i]) : 0.0);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  if (lo == hi) return {lo, hi};
  const double margin = 1e-12 * (hi - lo) + 1e-300;
  lo -= margin;
  hi += margin;

  const double lmin = detail::sturm_bisect(d, e, 1, lo, hi);
  const double lmax = detail::sturm_bisect(d, e, n, lo, hi);
  return {lmin, lmax};
}

}  // namespace midrange

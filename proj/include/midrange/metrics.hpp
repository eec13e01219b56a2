#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "midrange/cholesky.hpp"
#include "midrange/errors.hpp"
#include "midrange/gen_eig.hpp"
#include "midrange/spd_matrix.hpp"

namespace midrange {

// Affine-invariant distance family on the SPD cone: d(A,B) is a norm of the
// log-spectrum of B A^{-1}. thompson is the sup-norm (Thompson metric),
// riemannian the 2-norm, p_norm the general finite-p member.
class MetricKind {
 public:
  enum class Tag { thompson, riemannian, p_norm };

  static MetricKind thompson() { return MetricKind(Tag::thompson, 0.0); }
  static MetricKind riemannian() { return MetricKind(Tag::riemannian, 2.0); }
  static MetricKind p_norm(double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("MetricKind: p must be finite, >= 1");
    return MetricKind(Tag::p_norm, p);
  }

  Tag tag() const { return tag_; }
  double p() const { return p_; }

 private:
  MetricKind(Tag tag, double p) : tag_(tag), p_(p) {}
  Tag tag_;
  double p_;
};

// Cone gauge M(y/x) = inf{ lambda : y <= lambda x } = lambda_max(Y X^{-1}).
inline double gauge_M(const SpdMatrix& y, const SpdMatrix& x) {
  check_same_dim(y.dim(), x.dim(), "gauge_M");
  return gen_eig_extremes(x, y).max;
}

inline double dist(const SpdMatrix& a, const SpdMatrix& b, const MetricKind& kind) {
  check_same_dim(a.dim(), b.dim(), "dist");
  switch (kind.tag()) {
    case MetricKind::Tag::thompson: {
      // max{log lambda_max(BA^{-1}), log lambda_max(AB^{-1})}, and
      // lambda_max(AB^{-1}) = 1 / lambda_min(BA^{-1}): one extremes call.
      const ExtremeEigenvalues ex = gen_eig_extremes(a, b);
      return std::max(std::log(ex.max), -std::log(ex.min));
    }
    case MetricKind::Tag::riemannian: {
      double s = 0.0;
      for (double l : gen_eig_all(a, b)) {
        const double x = std::log(l);
        s += x * x;
      }
      return std::sqrt(s);
    }
    case MetricKind::Tag::p_norm: {
      double s = 0.0;
      for (double l : gen_eig_all(a, b)) s += std::pow(std::abs(std::log(l)), kind.p());
      return std::pow(s, 1.0 / kind.p());
    }
  }
  throw DomainError("dist: unknown metric kind");
}

inline double thompson_dist(const SpdMatrix& a, const SpdMatrix& b) {
  return dist(a, b, MetricKind::thompson());
}

// Riemannian inner product tr(Sigma^{-1} X Sigma^{-1} Y) on the tangent
// space at Sigma.
inline double riemannian_inner(const SpdMatrix& sigma, const SymMatrix& x, const SymMatrix& y) {
  check_same_dim(sigma.dim(), x.dim(), "riemannian_inner");
  check_same_dim(sigma.dim(), y.dim(), "riemannian_inner");
  const Matrix& l = sigma.chol();
  // Sigma^{-1} X = L^{-T} (L^{-1} X)
  const Matrix p = backward_solve_transposed(l, forward_solve(l, x.matrix()));
  const Matrix q = backward_solve_transposed(l, forward_solve(l, y.matrix()));
  const std::size_t n = sigma.dim();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) acc += p(i, j) * q(j, i);
  return acc;
}

struct DiameterResult {
  double value;
  std::size_t i;
  std::size_t j;
};

// Maximum pairwise distance; ties resolved toward the lexicographically
// first pair. Singletons and constant ensembles report (0, (0,0)).
inline DiameterResult diameter(std::span<const SpdMatrix> ys, const MetricKind& kind) {
  if (ys.empty()) throw EmptyEnsemble("diameter: empty ensemble");
  for (const SpdMatrix& y : ys) check_same_dim(ys.front().dim(), y.dim(), "diameter");
  DiameterResult best{0.0, 0, 0};
  for (std::size_t i = 0; i < ys.size(); ++i) {
    for (std::size_t j = i + 1; j < ys.size(); ++j) {
      const double d = dist(ys[i], ys[j], kind);
      if (d > best.value) best = {d, i, j};
    }
  }
  return best;
}

}  // namespace midrange

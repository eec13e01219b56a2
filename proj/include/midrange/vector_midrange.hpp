#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "midrange/errors.hpp"

namespace midrange {

// Element of the positive orthant; every component strictly positive and
// finite.
class PositiveVector {
 public:
  explicit PositiveVector(std::vector<double> x) : x_(std::move(x)) {
    if (x_.empty()) throw DimensionError("PositiveVector: empty");
    for (double v : x_) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw NonPositiveInput("PositiveVector: component not strictly positive and finite");
      }
    }
  }

  std::size_t dim() const { return x_.size(); }
  double operator[](std::size_t i) const { return x_[i]; }
  const std::vector<double>& values() const { return x_; }

 private:
  std::vector<double> x_;
};

struct ScalarMidrange {
  double x;     // geometric mean of min and max
  double cost;  // max_i |log x - log y_i| = log(max/min)/2
};

// Midrange of positive numbers: the unique minimizer of
// max_i |log x - log y_i| is sqrt(min * max).
inline ScalarMidrange scalar_midrange(std::span<const double> ys) {
  if (ys.empty()) throw EmptyEnsemble("scalar_midrange: empty input");
  double lo = ys.front();
  double hi = ys.front();
  for (double y : ys) {
    if (!(y > 0.0) || !std::isfinite(y)) {
      throw NonPositiveInput("scalar_midrange: inputs must be strictly positive");
    }
    lo = std::min(lo, y);
    hi = std::max(hi, y);
  }
  return {std::sqrt(lo * hi), 0.5 * std::log(hi / lo)};
}

struct VectorMidrange {
  PositiveVector x;
  double cost;         // max_i ||log x - log y_i||_inf
  double lower_bound;  // half the log-infinity diameter of the inputs
};

// Componentwise closed form: x^a = sqrt(min_i y_i^a * max_i y_i^a). The
// cost always equals the lower bound in the vector case.
inline VectorMidrange vector_midrange(std::span<const PositiveVector> ys) {
  if (ys.empty()) throw EmptyEnsemble("vector_midrange: empty input");
  const std::size_t n = ys.front().dim();
  for (const PositiveVector& y : ys) {
    if (y.dim() != n) throw DimensionError("vector_midrange: dimension mismatch");
  }

  std::vector<double> x(n);
  for (std::size_t a = 0; a < n; ++a) {
    double lo = ys.front()[a];
    double hi = ys.front()[a];
    for (const PositiveVector& y : ys) {
      lo = std::min(lo, y[a]);
      hi = std::max(hi, y[a]);
    }
    x[a] = std::sqrt(lo * hi);
  }

  double cost = 0.0;
  for (const PositiveVector& y : ys) {
    double d = 0.0;
    for (std::size_t a = 0; a < n; ++a) d = std::max(d, std::abs(std::log(x[a] / y[a])));
    cost = std::max(cost, d);
  }

  double lower = 0.0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    for (std::size_t j = i + 1; j < ys.size(); ++j) {
      double d = 0.0;
      for (std::size_t a = 0; a < n; ++a) d = std::max(d, std::abs(std::log(ys[i][a] / ys[j][a])));
      lower = std::max(lower, d);
    }
  }
  lower *= 0.5;

  return {PositiveVector(std::move(x)), cost, lower};
}

}  // namespace midrange

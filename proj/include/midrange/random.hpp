#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "midrange/dense.hpp"
#include "midrange/errors.hpp"
#include "midrange/spd_matrix.hpp"
#include "midrange/sym_matrix.hpp"

namespace midrange {

inline constexpr std::uint64_t kDefaultSeed = 42;

// mt19937_64 with hand-rolled uniform/normal draws. The engine's output
// sequence is pinned by the standard, so streams (and the fixtures built
// from them) reproduce across platforms; std::*_distribution would not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Box-Muller, one spare cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = uniform01();
    while (u == 0.0) u = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double theta = 2.0 * 3.14159265358979323846 * uniform01();
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Haar-ish random orthogonal matrix: modified Gram-Schmidt on a Gaussian
// matrix, one re-orthogonalization pass.
inline Matrix random_orthogonal(Rng& rng, std::size_t n) {
  Matrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.normal();

  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += g(i, k) * g(i, j);
        for (std::size_t i = 0; i < n; ++i) g(i, j) -= dot * g(i, k);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += g(i, j) * g(i, j);
    norm = std::sqrt(norm);
    if (norm < 1e-12) throw NumericalFailure("random_orthogonal: degenerate column");
    for (std::size_t i = 0; i < n; ++i) g(i, j) /= norm;
  }
  return g;
}

// Q diag(lambda) Q^T with log(lambda) uniform in [log_lo, log_hi].
inline SpdMatrix random_spd(Rng& rng, std::size_t n, double log_lo = -2.0, double log_hi = 2.0) {
  const Matrix q = random_orthogonal(rng, n);
  std::vector<double> lambda(n);
  for (std::size_t i = 0; i < n; ++i) lambda[i] = std::exp(rng.uniform(log_lo, log_hi));
  Matrix qd(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) qd(i, j) = q(i, j) * lambda[j];
  return SpdMatrix(SymMatrix(matmul(qd, transpose(q))));
}

// Random positive semidefinite matrix (eigenvalues uniform in [0, scale]),
// as a SymMatrix since it may be singular. Used to build ordered pairs.
inline SymMatrix random_psd(Rng& rng, std::size_t n, double scale = 1.0) {
  const Matrix q = random_orthogonal(rng, n);
  Matrix qd(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double l = scale * rng.uniform01();
    for (std::size_t i = 0; i < n; ++i) qd(i, j) = q(i, j) * l;
  }
  return SymMatrix(matmul(qd, transpose(q)));
}

// Random symmetric matrix with Gaussian entries (tangent vectors, test
// perturbations).
inline SymMatrix random_sym(Rng& rng, std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = rng.normal();
      m(i, j) = v;
      m(j, i) = v;
    }
  return SymMatrix(std::move(m));
}

// Random invertible matrix for congruence transforms; entries Gaussian,
// rejected only if numerically singular (never happens in practice).
inline Matrix random_invertible(Rng& rng, std::size_t n) {
  Matrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.normal();
  return g;
}

}  // namespace midrange

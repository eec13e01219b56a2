#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "midrange/cholesky.hpp"
#include "midrange/eig.hpp"
#include "midrange/errors.hpp"
#include "midrange/sym_matrix.hpp"
#include "midrange/tolerances.hpp"

namespace midrange {

// Validated point of the SPD cone. Construction gates on
// lambda_min > eps_pd * lambda_max (extreme eigenvalues, computed once);
// the full eigendecomposition and the Cholesky factor are cached lazily,
// each computed at most once even under concurrent use.
class SpdMatrix {
 public:
  explicit SpdMatrix(SymMatrix m) : base_(std::move(m)), cache_(std::make_shared<Cache>()) {
    if (base_.dim() == 0) throw DimensionError("SpdMatrix: empty matrix");
    const ExtremeEigenvalues ex = sym_extreme_eigenvalues(base_);
    if (!(ex.min > tol::eps_pd * ex.max)) {
      throw NotPositiveDefinite("SpdMatrix: eigenvalue gate failed (lambda_min " +
                                std::to_string(ex.min) + ", lambda_max " +
                                std::to_string(ex.max) + ")");
    }
    cache_->extremes = ex;
  }

  static SpdMatrix identity(std::size_t n) { return SpdMatrix(SymMatrix::identity(n)); }

  static SpdMatrix diagonal(const std::vector<double>& d) {
    return SpdMatrix(SymMatrix::diagonal(d));
  }

  static SpdMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    return SpdMatrix(SymMatrix::from_rows(rows));
  }

  std::size_t dim() const { return base_.dim(); }
  double operator()(std::size_t i, std::size_t j) const { return base_(i, j); }
  const SymMatrix& sym() const { return base_; }
  const Matrix& matrix() const { return base_.matrix(); }

  double lambda_min() const { return cache_->extremes.min; }
  double lambda_max() const { return cache_->extremes.max; }

  const EigDecomposition& eig() const {
    std::call_once(cache_->eig_once, [&] { cache_->eig.emplace(eig_sym(base_)); });
    return *cache_->eig;
  }

  const Matrix& chol() const {
    std::call_once(cache_->chol_once, [&] { cache_->chol.emplace(cholesky_factor(base_)); });
    return *cache_->chol;
  }

 private:
  struct Cache {
    ExtremeEigenvalues extremes{0.0, 0.0};
    std::once_flag eig_once;
    std::once_flag chol_once;
    std::optional<EigDecomposition> eig;
    std::optional<Matrix> chol;
  };

  SymMatrix base_;
  std::shared_ptr<Cache> cache_;  // shared by copies; all contents immutable once set
};

inline double frobenius_norm(const SpdMatrix& a) { return frobenius_norm(a.sym()); }

}  // namespace midrange

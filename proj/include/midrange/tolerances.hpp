#pragma once

// Numerical thresholds shared across the library. All are relative unless
// stated otherwise; distances and costs are in natural-log units.

namespace midrange::tol {

// Positive-definiteness gate at SpdMatrix construction:
// require lambda_min > eps_pd * lambda_max.
inline constexpr double eps_pd = 1e-10;

// Decomposition reconstruction accuracy (relative Frobenius).
inline constexpr double recon = 1e-9;

// Eigenvalue agreement tolerance.
inline constexpr double eig = 1e-8;

// Metric/midpoint identity tolerance (two decompositions compound error).
inline constexpr double metric = 1e-7;

// Relative eigenvalue-coincidence threshold for the degenerate branch of
// the projective straight-line geodesic.
inline constexpr double branch = 1e-12;

// Jacobi sweep cap and off-diagonal stopping threshold (relative to ||m||_F).
inline constexpr int jacobi_max_sweeps = 100;
inline constexpr double jacobi_off = 1e-12;

}  // namespace midrange::tol

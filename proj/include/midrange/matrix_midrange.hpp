#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "midrange/eig.hpp"
#include "midrange/errors.hpp"
#include "midrange/metrics.hpp"
#include "midrange/midpoints.hpp"
#include "midrange/random.hpp"
#include "midrange/spd_matrix.hpp"
#include "midrange/tolerances.hpp"

namespace midrange {

// N-point midrange on the SPD cone:
//   minimize over X the worst Thompson distance max_i d(X, Y_i),
// equivalently min t s.t. e^{-t} Y_i <= X <= e^{t} Y_i for all i.
// Fixed-t feasibility is convex and solved by Dykstra's cyclic projections;
// t is then driven down by bisection inside the half-diameter bounds.

struct SolverOptions {
  double tol_t = 1e-6;        // bisection gap on t
  double eps_feas = 1e-8;     // residual threshold, relative to max ||Y_i||_F
  int max_proj_iters = 5000;  // Dykstra cycle cap
  int stall_window = 200;     // cycles between stall comparisons
  double eps_prog = 1e-10;    // minimum relative residual decrease per window

  void validate() const {
    if (!(tol_t > 0.0) || !(eps_feas > 0.0) || max_proj_iters <= 0 || stall_window <= 0 ||
        !(eps_prog > 0.0)) {
      throw DomainError("SolverOptions: all options must be positive");
    }
  }
};

struct Bounds {
  double lower;              // half the Thompson diameter
  double upper;              // best cost among the Y_i themselves; <= 2*lower
  std::size_t center_index;  // argmin_i max_j d(Y_i, Y_j), lowest index on ties
};

inline void check_ensemble(std::span<const SpdMatrix> ys, const char* where) {
  if (ys.empty()) throw EmptyEnsemble(std::string(where) + ": empty ensemble");
  for (const SpdMatrix& y : ys) check_same_dim(ys.front().dim(), y.dim(), where);
}

inline Bounds bounds(std::span<const SpdMatrix> ys) {
  check_ensemble(ys, "bounds");
  const std::size_t n = ys.size();
  if (n == 1) return {0.0, 0.0, 0};

  std::vector<double> d(n * n, 0.0);
  double diam = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dij = thompson_dist(ys[i], ys[j]);
      d[i * n + j] = dij;
      d[j * n + i] = dij;
      diam = std::max(diam, dij);
    }
  }
  double best = std::numeric_limits<double>::infinity();
  std::size_t center = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, d[i * n + j]);
    if (worst < best) {
      best = worst;
      center = i;
    }
  }
  return {0.5 * diam, best, center};
}

// Frobenius projection onto {X : X >= C}: keep the positive part of X - C.
inline SymMatrix project_onto_lower(const SymMatrix& x, const SpdMatrix& c) {
  check_same_dim(x.dim(), c.dim(), "project_onto_lower");
  return c.sym() + clip_positive(x - c.sym());
}

// Frobenius projection onto {X : X <= D}.
inline SymMatrix project_onto_upper(const SymMatrix& x, const SpdMatrix& d) {
  check_same_dim(x.dim(), d.dim(), "project_onto_upper");
  return d.sym() - clip_positive(d.sym() - x);
}

enum class Verdict { feasible, infeasible, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::feasible: return "feasible";
    case Verdict::infeasible: return "infeasible";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct FeasibilityReport {
  double t = 0.0;
  Verdict verdict = Verdict::inconclusive;
  std::optional<SpdMatrix> x;  // set when feasible
  double residual = 0.0;       // worst negative-eigenvalue magnitude over all 2N constraints
  int iters = 0;               // Dykstra cycles used
};

namespace detail {

inline double constraint_residual(const SymMatrix& x, std::span<const SymMatrix> lowers,
                                  std::span<const SymMatrix> uppers) {
  double r = 0.0;
  for (const SymMatrix& c : lowers) r = std::max(r, -sym_extreme_eigenvalues(x - c).min);
  for (const SymMatrix& d : uppers) r = std::max(r, -sym_extreme_eigenvalues(d - x).min);
  return std::max(r, 0.0);
}

}  // namespace detail

// Dykstra's cyclically corrected projections over the 2N sets
// {X >= e^{-t} Y_i} and {X <= e^{t} Y_i}, started from the arithmetic mean.
// Verdicts: feasible once the residual clears the threshold, infeasible when
// the residual stalls (no dual certificate exists, so this is a heuristic),
// inconclusive when the cycle cap is hit while still progressing.
inline FeasibilityReport feasibility(std::span<const SpdMatrix> ys, double t,
                                     const SolverOptions& opts = {}) {
  check_ensemble(ys, "feasibility");
  opts.validate();
  if (!(t >= 0.0)) throw DomainError("feasibility: t must be nonnegative");

  const std::size_t count = ys.size();
  const std::size_t dim = ys.front().dim();

  double max_norm = 0.0;
  for (const SpdMatrix& y : ys) max_norm = std::max(max_norm, frobenius_norm(y));
  const double eps_abs = opts.eps_feas * max_norm;

  const double el = std::exp(-t);
  const double eu = std::exp(t);
  std::vector<SymMatrix> lowers, uppers;
  std::vector<SpdMatrix> lower_spd, upper_spd;
  lowers.reserve(count);
  uppers.reserve(count);
  for (const SpdMatrix& y : ys) {
    lowers.push_back(el * y.sym());
    uppers.push_back(eu * y.sym());
    lower_spd.push_back(SpdMatrix(lowers.back()));
    upper_spd.push_back(SpdMatrix(uppers.back()));
  }

  Matrix acc(dim);
  for (const SpdMatrix& y : ys) acc = acc + y.matrix();
  SymMatrix x = SymMatrix((1.0 / static_cast<double>(count)) * acc);

  FeasibilityReport report;
  report.t = t;

  // Pairwise necessary condition: no t below the half-diameter can be
  // feasible. Saves the projection loop a guaranteed stall.
  if (count >= 2) {
    const double half_diam = bounds(ys).lower;
    if (t < half_diam - tol::eig) {
      report.verdict = Verdict::infeasible;
      report.residual = detail::constraint_residual(x, lowers, uppers);
      report.iters = 0;
      return report;
    }
  }

  std::vector<SymMatrix> increments(2 * count, SymMatrix::zero(dim));
  std::vector<double> history;
  history.reserve(static_cast<std::size_t>(opts.max_proj_iters) + 1);

  for (int iter = 0; iter <= opts.max_proj_iters; ++iter) {
    const double residual = detail::constraint_residual(x, lowers, uppers);
    report.residual = residual;
    report.iters = iter;
    if (residual <= eps_abs) {
      report.verdict = Verdict::feasible;
      report.x = SpdMatrix(x);
      return report;
    }
    history.push_back(residual);
    if (iter >= opts.stall_window) {
      const double before = history[static_cast<std::size_t>(iter - opts.stall_window)];
      const double decrement = before - residual;
      if (decrement < opts.eps_prog * before) {
        report.verdict = Verdict::infeasible;  // stalled
        return report;
      }
      // Budget projection: even sustaining the current per-window decrement
      // (optimistic for the sublinear tails these projections produce), the
      // residual cannot reach the threshold within the cycle cap. Declaring
      // early keeps boundary probes from burning the whole budget.
      if (iter + opts.stall_window <= opts.max_proj_iters) {
        const double windows_left =
            static_cast<double>(opts.max_proj_iters - iter) / opts.stall_window;
        if (residual - decrement * windows_left > eps_abs) {
          report.verdict = Verdict::infeasible;  // cannot certify within budget
          return report;
        }
      }
    }
    if (iter == opts.max_proj_iters) break;

    for (std::size_t i = 0; i < count; ++i) {
      {
        const SymMatrix z = x + increments[2 * i];
        const SymMatrix y = project_onto_lower(z, lower_spd[i]);
        increments[2 * i] = z - y;
        x = y;
      }
      {
        const SymMatrix z = x + increments[2 * i + 1];
        const SymMatrix y = project_onto_upper(z, upper_spd[i]);
        increments[2 * i + 1] = z - y;
        x = y;
      }
    }
  }

  report.verdict = Verdict::inconclusive;
  return report;
}

struct MidrangeSolution {
  SpdMatrix x_star;
  double t_star;        // cost achieved by x_star: max_i d(x_star, Y_i)
  double lower_bound;   // l
  double upper_bound;   // u
  bool attained_lower;  // t_star <= l + tol_t + 10*eps_feas
  std::vector<FeasibilityReport> trace;
};

namespace detail {

inline double ensemble_cost(const SpdMatrix& x, std::span<const SpdMatrix> ys) {
  double worst = 0.0;
  for (const SpdMatrix& y : ys) worst = std::max(worst, thompson_dist(x, y));
  return worst;
}

}  // namespace detail

// Bisection driver. N=1 and N=2 have closed forms (the 2-point fast path is
// the star midpoint, whose cost is exactly the lower bound). For N >= 3 the
// probe order is t = l (one-shot when the bound is attained), t = u (sanity;
// Y_center certifies u regardless of the projection verdict), then plain
// bisection. An inconclusive probe stops the refinement without moving the
// bracket; the verdict stays visible in the trace. The reported t_star is the
// cost achieved by the best available certificate, so
// max_i d(x_star, Y_i) == t_star by construction.
inline MidrangeSolution solve_midrange(std::span<const SpdMatrix> ys,
                                       const SolverOptions& opts = {}) {
  check_ensemble(ys, "solve_midrange");
  opts.validate();
  const double eps_slack = 10.0 * opts.eps_feas;

  if (ys.size() == 1) {
    return {ys.front(), 0.0, 0.0, 0.0, true, {}};
  }

  const Bounds bd = bounds(ys);

  if (ys.size() == 2) {
    SpdMatrix x = star_midpoint(ys[0], ys[1]);
    return {std::move(x), bd.lower, bd.lower, bd.upper, true, {}};
  }

  std::vector<FeasibilityReport> trace;
  std::vector<SpdMatrix> candidates;
  candidates.push_back(ys[bd.center_index]);  // achieves u by construction

  FeasibilityReport at_l = feasibility(ys, bd.lower, opts);
  const bool l_feasible = (at_l.verdict == Verdict::feasible);
  if (l_feasible) candidates.push_back(*at_l.x);
  trace.push_back(std::move(at_l));

  if (!l_feasible) {
    FeasibilityReport at_u = feasibility(ys, bd.upper, opts);
    if (at_u.verdict == Verdict::feasible) candidates.push_back(*at_u.x);
    trace.push_back(std::move(at_u));

    double lo = bd.lower;
    double hi = bd.upper;
    while (hi - lo > opts.tol_t) {
      const double mid = 0.5 * (lo + hi);
      FeasibilityReport rep = feasibility(ys, mid, opts);
      const Verdict verdict = rep.verdict;
      if (verdict == Verdict::feasible) {
        hi = mid;
        candidates.push_back(*rep.x);
      } else if (verdict == Verdict::infeasible) {
        lo = mid;
      }
      trace.push_back(std::move(rep));
      if (verdict == Verdict::inconclusive) break;  // bracket left untouched
    }
  }

  double best_cost = std::numeric_limits<double>::infinity();
  std::size_t best = 0;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const double c = detail::ensemble_cost(candidates[k], ys);
    if (c < best_cost) {
      best_cost = c;
      best = k;
    }
  }

  return {std::move(candidates[best]), best_cost, bd.lower, bd.upper,
          best_cost <= bd.lower + opts.tol_t + eps_slack, std::move(trace)};
}

struct OracleResult {
  double cost;
  SpdMatrix x;
};

// Brute-force minimax search over 2x2 SPD matrices [[p,q],[q,r]]: grid seeds
// inside the box e^{-u} Y_i <= X <= e^{u} Y_i, then shrinking-step pattern
// search from the best seeds. Independent of the projection/bisection path;
// the returned cost is an upper estimate of the optimum that tightens as the
// resolution shrinks.
inline OracleResult oracle_min_cost_2x2(std::span<const SpdMatrix> ys, double resolution = 0.04,
                                        int refinement_rounds = 60) {
  check_ensemble(ys, "oracle_min_cost_2x2");
  if (ys.front().dim() != 2) throw DimensionError("oracle_min_cost_2x2: dimension must be 2");
  if (!(resolution > 0.0 && resolution < 1.0)) {
    throw DomainError("oracle_min_cost_2x2: resolution must lie in (0,1)");
  }

  const double u = bounds(ys).upper;
  const double el = std::exp(-u);
  const double eu = std::exp(u);

  double p_lo = 0.0, p_hi = std::numeric_limits<double>::infinity();
  double r_lo = 0.0, r_hi = std::numeric_limits<double>::infinity();
  for (const SpdMatrix& y : ys) {
    p_lo = std::max(p_lo, el * y(0, 0));
    p_hi = std::min(p_hi, eu * y(0, 0));
    r_lo = std::max(r_lo, el * y(1, 1));
    r_hi = std::min(r_hi, eu * y(1, 1));
  }
  const double q_max = std::sqrt(p_hi * r_hi);

  const auto cost_at = [&](double p, double q, double r) -> double {
    if (!(p > 0.0) || !(r > 0.0)) return std::numeric_limits<double>::infinity();
    if (!(p * r - q * q > 1e-14 * p * r)) return std::numeric_limits<double>::infinity();
    Matrix m(2);
    m(0, 0) = p;
    m(0, 1) = q;
    m(1, 0) = q;
    m(1, 1) = r;
    const SpdMatrix x{SymMatrix(std::move(m))};
    double worst = 0.0;
    for (const SpdMatrix& y : ys) worst = std::max(worst, thompson_dist(x, y));
    return worst;
  };

  struct Point {
    double p, q, r, cost;
  };

  const int steps = std::max(2, static_cast<int>(std::lround(1.0 / resolution)));
  std::vector<Point> seeds;
  for (int a = 0; a <= steps; ++a) {
    const double p = p_lo + (p_hi - p_lo) * a / steps;
    for (int b = 0; b <= steps; ++b) {
      const double q = -q_max + 2.0 * q_max * b / steps;
      for (int c = 0; c <= steps; ++c) {
        const double r = r_lo + (r_hi - r_lo) * c / steps;
        const double f = cost_at(p, q, r);
        if (std::isfinite(f)) seeds.push_back({p, q, r, f});
      }
    }
  }
  if (seeds.empty()) {
    // Box carved down to nothing; fall back to the inputs themselves.
    for (const SpdMatrix& y : ys) seeds.push_back({y(0, 0), y(0, 1), y(1, 1), 0.0});
    for (Point& s : seeds) s.cost = cost_at(s.p, s.q, s.r);
  }
  std::sort(seeds.begin(), seeds.end(), [](const Point& a, const Point& b) { return a.cost < b.cost; });
  const std::size_t starts = std::min<std::size_t>(8, seeds.size());

  // 26 compass/diagonal directions in (p,q,r).
  std::vector<std::array<int, 3>> dirs;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c)
        if (a || b || c) dirs.push_back({a, b, c});

  Point best = seeds.front();
  // Move scales stay tied to the matrix magnitudes even when the seeding box
  // degenerates to a point (singletons, tight ensembles).
  const double scale_p = std::max(p_hi - p_lo, 0.5 * p_hi);
  const double scale_q = std::max(2.0 * q_max, 1e-6);
  const double scale_r = std::max(r_hi - r_lo, 0.5 * r_hi);

  for (std::size_t s = 0; s < starts; ++s) {
    Point cur = seeds[s];
    double step = resolution;
    for (int round = 0; round < refinement_rounds; ++round) {
      Point next = cur;
      // sufficient decrease, so crumb-sized gains cannot block step halving
      const double forcing = 1e-4 * step * step;
      bool moved = false;
      for (const auto& d : dirs) {
        const double p = cur.p + d[0] * step * scale_p;
        const double q = cur.q + d[1] * step * scale_q;
        const double r = cur.r + d[2] * step * scale_r;
        const double f = cost_at(p, q, r);
        if (f < next.cost - forcing) {
          next = {p, q, r, f};
          moved = true;
        }
      }
      if (moved) {
        cur = next;
      } else {
        step *= 0.5;
        if (step < 1e-13) break;
      }
    }
    if (cur.cost < best.cost) best = cur;
  }

  Matrix m(2);
  m(0, 0) = best.p;
  m(0, 1) = best.q;
  m(1, 0) = best.q;
  m(1, 1) = best.r;
  return {best.cost, SpdMatrix(SymMatrix(std::move(m)))};
}

struct GapInstance {
  std::vector<SpdMatrix> ys;
  double lower_bound;
  double best_cost;
  double gap;
  std::uint64_t seed;
  int trial;  // index of the random triple that produced the instance
};

// Random search for an ensemble whose optimal cost strictly exceeds the
// half-diameter lower bound: triples of random SPD matrices, screened by the
// projection solver at t = l + 10*eps_feas, then cross-validated by the
// brute-force oracle (dim 2). For other dims the secondary evidence is
// infeasibility at t = l + gap_margin and the cost of the bisection solve.
inline GapInstance find_gap_instance(std::size_t dim = 2, int trials = 200,
                                     std::uint64_t seed = kDefaultSeed,
                                     const SolverOptions& opts = {}, double gap_margin = 1e-3) {
  opts.validate();
  Rng rng(seed);
  int screened = 0;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<SpdMatrix> ys;
    ys.reserve(3);
    for (int k = 0; k < 3; ++k) ys.push_back(random_spd(rng, dim));

    const double l = bounds(ys).lower;
    const FeasibilityReport rep = feasibility(ys, l + 10.0 * opts.eps_feas, opts);
    if (rep.verdict != Verdict::infeasible) continue;
    ++screened;

    if (dim == 2) {
      const OracleResult oracle = oracle_min_cost_2x2(ys);
      if (oracle.cost >= l + gap_margin) {
        return {std::move(ys), l, oracle.cost, oracle.cost - l, seed, trial};
      }
    } else {
      const FeasibilityReport wide = feasibility(ys, l + gap_margin, opts);
      if (wide.verdict == Verdict::infeasible) {
        const double cost = solve_midrange(ys, opts).t_star;
        if (cost >= l + gap_margin) {
          return {std::move(ys), l, cost, cost - l, seed, trial};
        }
      }
    }
  }
  throw SearchExhausted("find_gap_instance: no gap instance in " + std::to_string(trials) +
                        " trials (" + std::to_string(screened) + " passed the projection screen)");
}

}  // namespace midrange

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "support.hpp"

using namespace midrange;
using Catch::Approx;

namespace {
const double kLog2 = std::log(2.0);
const double kLog4 = std::log(4.0);

std::vector<SpdMatrix> random_ensemble(Rng& rng, std::size_t count, std::size_t n) {
  std::vector<SpdMatrix> ys;
  ys.reserve(count);
  for (std::size_t i = 0; i < count; ++i) ys.push_back(random_spd(rng, n));
  return ys;
}
}  // namespace

TEST_CASE("half-diameter and center bounds") {
  const SpdMatrix i2 = SpdMatrix::identity(2);
  const std::vector<SpdMatrix> pair{i2, SpdMatrix::diagonal({1.0, 4.0})};
  auto bd = bounds(pair);
  REQUIRE(bd.lower == Approx(kLog2).margin(1e-12));
  REQUIRE(bd.upper == Approx(kLog4).margin(1e-12));

  const std::vector<SpdMatrix> single{i2};
  bd = bounds(single);
  REQUIRE(bd.lower == 0.0);
  REQUIRE(bd.upper == 0.0);

  const std::vector<SpdMatrix> scales{i2, SpdMatrix(2.0 * i2.sym()), SpdMatrix(4.0 * i2.sym())};
  bd = bounds(scales);
  REQUIRE(bd.lower == Approx(kLog2).margin(1e-12));
  REQUIRE(bd.upper == Approx(kLog2).margin(1e-12));
  REQUIRE(bd.center_index == 1);

  REQUIRE_THROWS_AS(bounds(std::span<const SpdMatrix>{}), EmptyEnsemble);
}

TEST_CASE("bounds sandwich l <= u <= 2l on random ensembles") {
  Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t count = 2 + static_cast<std::size_t>(rng.uniform(0.0, 5.0));
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(0.0, 4.0));
    const auto ys = random_ensemble(rng, count, n);
    const auto bd = bounds(ys);
    REQUIRE(bd.lower <= bd.upper + tol::eig);
    REQUIRE(bd.upper <= 2.0 * bd.lower + tol::eig);
  }
}

TEST_CASE("semidefinite order projections") {
  const SpdMatrix i2 = SpdMatrix::identity(2);

  // PSD clipping of the positive part
  const SymMatrix clipped = clip_positive(SymMatrix::diagonal({2.0, -1.0}));
  REQUIRE(clipped(0, 0) == Approx(2.0).margin(1e-13));
  REQUIRE(clipped(1, 1) == Approx(0.0).margin(1e-13));

  // x = 0 projected onto {X >= I} is I
  const SymMatrix up = project_onto_lower(SymMatrix::zero(2), i2);
  REQUIRE(support::max_abs_diff(up.matrix(), Matrix::identity(2)) < 1e-13);

  Rng rng(62);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(0.0, 4.0));
    const SymMatrix x = random_sym(rng, n);
    const SpdMatrix c = random_spd(rng, n);

    const SymMatrix pl = project_onto_lower(x, c);
    REQUIRE(sym_extreme_eigenvalues(pl - c.sym()).min >= -tol::eig);
    // projection is idempotent and fixes feasible points
    REQUIRE(support::max_abs_diff(project_onto_lower(pl, c), pl) < tol::eig);
    const SpdMatrix above = support::ordered_above(rng, c);
    REQUIRE(support::max_abs_diff(project_onto_lower(above.sym(), c), above.sym()) < tol::eig);

    const SymMatrix pu = project_onto_upper(x, c);
    REQUIRE(sym_extreme_eigenvalues(c.sym() - pu).min >= -tol::eig);
    REQUIRE(support::max_abs_diff(project_onto_upper(pu, c), pu) < tol::eig);
  }
}

TEST_CASE("feasibility on worked examples") {
  const SpdMatrix i2 = SpdMatrix::identity(2);
  const SpdMatrix d14 = SpdMatrix::diagonal({1.0, 4.0});

  SECTION("singleton is feasible at any t, starting point already works") {
    Rng rng(63);
    const std::vector<SpdMatrix> ys{random_spd(rng, 3)};
    for (const double t : {0.0, 0.3, 2.0}) {
      const auto rep = feasibility(ys, t);
      REQUIRE(rep.verdict == Verdict::feasible);
      REQUIRE(rep.iters == 0);
    }
  }

  SECTION("two points at t = half-diameter") {
    const std::vector<SpdMatrix> ys{i2, d14};
    const auto rep = feasibility(ys, kLog2);
    REQUIRE(rep.verdict == Verdict::feasible);
    REQUIRE(rep.x.has_value());
    // returned point satisfies all four order constraints
    const double el = std::exp(-kLog2);
    const double eu = std::exp(kLog2);
    for (const SpdMatrix& y : ys) {
      REQUIRE(sym_extreme_eigenvalues(rep.x->sym() - el * y.sym()).min >= -1e-7);
      REQUIRE(sym_extreme_eigenvalues(eu * y.sym() - rep.x->sym()).min >= -1e-7);
    }
  }

  SECTION("below the half-diameter the pairwise pre-check rejects immediately") {
    const std::vector<SpdMatrix> ys{i2, d14};
    const auto rep = feasibility(ys, 0.5 * kLog2);
    REQUIRE(rep.verdict == Verdict::infeasible);
    REQUIRE(rep.iters == 0);
  }

  SECTION("t must be nonnegative") {
    const std::vector<SpdMatrix> ys{i2};
    REQUIRE_THROWS_AS(feasibility(ys, -0.1), DomainError);
  }
}

TEST_CASE("feasibility is monotone in t") {
  Rng rng(64);
  for (int trial = 0; trial < 6; ++trial) {
    const auto ys = random_ensemble(rng, 3, 3);
    const auto bd = bounds(ys);
    // u is always feasible; anything above stays feasible
    const auto at_u = feasibility(ys, bd.upper);
    REQUIRE(at_u.verdict == Verdict::feasible);
    const auto above = feasibility(ys, bd.upper + 0.1);
    REQUIRE(above.verdict == Verdict::feasible);
  }
}

TEST_CASE("solve on worked examples") {
  const SpdMatrix i2 = SpdMatrix::identity(2);
  const SpdMatrix d14 = SpdMatrix::diagonal({1.0, 4.0});

  SECTION("two points use the star-midpoint fast path") {
    const std::vector<SpdMatrix> ys{i2, d14};
    const auto sol = solve_midrange(ys);
    REQUIRE(sol.t_star == Approx(kLog2).margin(1e-12));
    REQUIRE(sol.t_star == bounds(ys).lower);  // exact, same computation
    REQUIRE(sol.attained_lower);
    REQUIRE(sol.x_star(0, 0) == Approx(1.0).margin(1e-10));
    REQUIRE(sol.x_star(1, 1) == Approx(2.0).margin(1e-10));
  }

  SECTION("singleton") {
    const std::vector<SpdMatrix> ys{d14};
    const auto sol = solve_midrange(ys);
    REQUIRE(sol.t_star == 0.0);
    REQUIRE(sol.attained_lower);
    REQUIRE(support::max_abs_diff(sol.x_star, d14) == 0.0);
  }

  SECTION("commuting scales solve in one feasibility step") {
    const std::vector<SpdMatrix> ys{i2, SpdMatrix(2.0 * i2.sym()), SpdMatrix(4.0 * i2.sym())};
    const auto sol = solve_midrange(ys);
    REQUIRE(sol.t_star == Approx(kLog2).margin(1e-6));
    REQUIRE(sol.attained_lower);
    REQUIRE(support::max_abs_diff(sol.x_star.matrix(), 2.0 * Matrix::identity(2)) < 1e-5);
  }
}

TEST_CASE("solution certificate achieves its reported cost") {
  Rng rng(65);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t count = 3 + static_cast<std::size_t>(rng.uniform(0.0, 3.0));
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(0.0, 3.0));
    const auto ys = random_ensemble(rng, count, n);
    const auto sol = solve_midrange(ys);

    double worst = 0.0;
    for (const SpdMatrix& y : ys) worst = std::max(worst, thompson_dist(sol.x_star, y));
    REQUIRE(worst <= sol.t_star + 1e-7);

    REQUIRE(sol.lower_bound <= sol.t_star + 1e-6);
    REQUIRE(sol.t_star <= sol.upper_bound + 1e-6);
    REQUIRE(sol.upper_bound <= 2.0 * sol.lower_bound + tol::eig);
  }
}

TEST_CASE("optimal cost is affine equivariant") {
  Rng rng(66);
  for (int trial = 0; trial < 4; ++trial) {
    const auto ys = random_ensemble(rng, 3, 3);
    const Matrix x = random_invertible(rng, 3);
    std::vector<SpdMatrix> mapped;
    for (const SpdMatrix& y : ys) mapped.push_back(support::congruence(x, y));

    const double t0 = solve_midrange(ys).t_star;
    const double t1 = solve_midrange(mapped).t_star;
    REQUIRE(t1 == Approx(t0).margin(1e-6 + tol::metric * (1.0 + t0)));
  }
}

TEST_CASE("simultaneously diagonal ensembles reduce to the vector problem") {
  Rng rng(67);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t count = 3 + static_cast<std::size_t>(rng.uniform(0.0, 3.0));
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(0.0, 3.0));

    std::vector<SpdMatrix> ys;
    std::vector<PositiveVector> vecs;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<double> d(n);
      for (double& v : d) v = std::exp(rng.uniform(-2.0, 2.0));
      ys.push_back(SpdMatrix::diagonal(d));
      vecs.push_back(PositiveVector(std::move(d)));
    }

    const auto sol = solve_midrange(ys);
    const auto vec = vector_midrange(vecs);
    REQUIRE(sol.t_star == Approx(vec.cost).margin(1e-6));
  }
}

TEST_CASE("brute-force oracle recovers known optima") {
  const SpdMatrix i2 = SpdMatrix::identity(2);
  const std::vector<SpdMatrix> pair{i2, SpdMatrix::diagonal({1.0, 4.0})};
  const auto coarse = oracle_min_cost_2x2(pair, 0.1, 30);
  REQUIRE(coarse.cost >= kLog2 - 1e-9);
  REQUIRE(coarse.cost <= kLog2 + 2e-2);
  const auto fine = oracle_min_cost_2x2(pair, 0.04, 60);
  REQUIRE(fine.cost <= kLog2 + 1e-4);

  Rng rng(68);
  const SpdMatrix a = random_spd(rng, 2);
  const std::vector<SpdMatrix> single{a};
  REQUIRE(oracle_min_cost_2x2(single).cost <= 1e-6);

  REQUIRE_THROWS_AS(oracle_min_cost_2x2(random_ensemble(rng, 2, 3)), DimensionError);
}

TEST_CASE("two-point ensembles always attain the lower bound") {
  Rng rng(69);
  for (int trial = 0; trial < 6; ++trial) {
    const auto ys = random_ensemble(rng, 2, 2);
    const double l = bounds(ys).lower;
    // the star midpoint certifies cost l directly
    const double cost = std::max(thompson_dist(star_midpoint(ys[0], ys[1]), ys[0]),
                                 thompson_dist(star_midpoint(ys[0], ys[1]), ys[1]));
    REQUIRE(cost <= l + tol::metric);
    // and the projection solver certifies any t with working margin
    const auto rep = feasibility(ys, l + 2e-2);
    REQUIRE(rep.verdict == Verdict::feasible);
  }
}

TEST_CASE("commuting diagonal triples attain the lower bound") {
  Rng rng(70);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<SpdMatrix> ys;
    for (int i = 0; i < 3; ++i) {
      ys.push_back(SpdMatrix::diagonal(
          {std::exp(rng.uniform(-2.0, 2.0)), std::exp(rng.uniform(-2.0, 2.0))}));
    }
    const double l = bounds(ys).lower;
    const auto rep = feasibility(ys, l + 1e-7);
    REQUIRE(rep.verdict == Verdict::feasible);
  }
}

TEST_CASE("gap search rejects trivial configurations and validates its options") {
  REQUIRE_THROWS_AS(find_gap_instance(2, 0), SearchExhausted);
  SolverOptions bad;
  bad.tol_t = -1.0;
  REQUIRE_THROWS_AS(solve_midrange(std::vector<SpdMatrix>{SpdMatrix::identity(2)}, bad),
                    DomainError);
}

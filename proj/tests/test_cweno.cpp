#include <array>
#include <cmath>
#include <random>

#include "core/fv.hpp"
#include "cweno/cweno.hpp"
#include "doctest.h"

using namespace quinpi;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Edge values of the one-sided linear polynomials and the optimal parabola,
// as 3-point coefficient vectors on (u_{j-1}, u_j, u_{j+1}).
constexpr std::array<double, 3> kPLright = {-0.5, 1.5, 0.0};
constexpr std::array<double, 3> kPLleft = {0.5, 0.5, 0.0};
constexpr std::array<double, 3> kPRright = {0.0, 0.5, 0.5};
constexpr std::array<double, 3> kPRleft = {0.0, 1.5, -0.5};
constexpr std::array<double, 3> kPoptRight = {-1.0 / 6, 5.0 / 6, 2.0 / 6};
constexpr std::array<double, 3> kPoptLeft = {2.0 / 6, 5.0 / 6, -1.0 / 6};
}  // namespace

TEST_CASE("optimal polynomial coefficients") {
  PolyCoeffs p = optimal_poly(1, 1, 1, 1.0);
  CHECK(p.a == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.b == doctest::Approx(0.0));
  CHECK(p.c == doctest::Approx(0.0));

  p = optimal_poly(0, 1, 2, 1.0);
  CHECK(p.a == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.b == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.c == doctest::Approx(0.0));

  p = optimal_poly(0, 0, 1, 1.0);
  CHECK(p.a == doctest::Approx(-1.0 / 24).epsilon(1e-14));
  CHECK(p.b == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(p.c == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("optimal polynomial reproduces the three cell averages") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  const double h = 0.37;
  for (int i = 0; i < 50; ++i) {
    const double um = dist(rng), uc = dist(rng), up = dist(rng);
    const PolyCoeffs p = optimal_poly(um, uc, up, h);
    // Average of a + b x + c x^2 over [x0, x0 + h], x relative to x_j.
    const auto avg = [&](double x0) {
      const double x1 = x0 + h;
      return p.a + p.b * (x1 * x1 - x0 * x0) / (2 * h) +
             p.c * (x1 * x1 * x1 - x0 * x0 * x0) / (3 * h);
    };
    CHECK(avg(-1.5 * h) == doctest::Approx(um).epsilon(1e-12));
    CHECK(avg(-0.5 * h) == doctest::Approx(uc).epsilon(1e-12));
    CHECK(avg(0.5 * h) == doctest::Approx(up).epsilon(1e-12));
  }
}

TEST_CASE("smoothness indicators") {
  Indicators i = smoothness_indicators(1, 1, 1);
  CHECK(i.left == 0.0);
  CHECK(i.center == 0.0);
  CHECK(i.right == 0.0);

  i = smoothness_indicators(0, 0, 1);
  CHECK(i.left == doctest::Approx(0.0));
  CHECK(i.right == doctest::Approx(1.0));
  CHECK(i.center == doctest::Approx(55.0 / 12).epsilon(1e-14));

  i = smoothness_indicators(0, 1, 2);
  CHECK(i.left == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(i.center == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(i.right == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("nonlinear weights") {
  const LinearWeights lin;
  const Indicators zero{0.0, 0.0, 0.0};
  NonlinearWeights w = nonlinear_weights(zero, lin, 1e-6, 2.0);
  CHECK(w.w0 == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(w.wl == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(w.wr == doctest::Approx(0.25).epsilon(1e-14));

  const Indicators equal{0.7, 0.7, 0.7};
  w = nonlinear_weights(equal, lin, 1e-6, 2.0);
  CHECK(w.w0 == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(w.wl == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(w.wr == doctest::Approx(0.25).epsilon(1e-13));

  // (0,0,1) stencil: left stencil is the smooth one.
  const Indicators step{0.0, 55.0 / 12, 1.0};
  w = nonlinear_weights(step, lin, 1e-4, 2.0);
  CHECK(w.wl > w.w0);
  CHECK(w.wl > w.wr);
  // Direct evaluation of the definition.
  const double t0 = 0.5 / std::pow(1e-4 + 55.0 / 12, 2);
  const double tl = 0.25 / std::pow(1e-4, 2);
  const double tr = 0.25 / std::pow(1e-4 + 1.0, 2);
  CHECK(w.wl == doctest::Approx(tl / (t0 + tl + tr)).epsilon(1e-13));

  // Normalization and positivity on random stencils.
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const Indicators ind = smoothness_indicators(dist(rng), dist(rng), dist(rng));
    w = nonlinear_weights(ind, lin, 1e-8, 2.0);
    CHECK(w.w0 + w.wl + w.wr == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(w.w0 >= 0.0);
    CHECK(w.wl >= 0.0);
    CHECK(w.wr >= 0.0);
  }
}

TEST_CASE("edge collapse: optimal weights give the analytic coefficients") {
  const CwenoParams params;
  // Constant data: all indicators vanish, weights equal the linear ones.
  const CellWeightSet w = cell_weight_set(2.0, 2.0, 2.0, 0.1, params);
  for (int l = 0; l < 3; ++l) {
    CHECK(std::fabs(w.wminus[l] - kPoptRight[l]) < 1e-14);
    CHECK(std::fabs(w.wplus[l] - kPoptLeft[l]) < 1e-14);
  }
}

TEST_CASE("edge collapse equals the weighted stencil combination") {
  // Independent oracle: W- = w0*P0_edge + wl*PL_edge + wr*PR_edge where
  // P0_edge is defined by (Popt - cl*PL - cr*PR)/c0.
  const CwenoParams params;
  const LinearWeights lin = params.linear;
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  const double h = 0.05;
  for (int i = 0; i < 100; ++i) {
    const double um = dist(rng), uc = dist(rng), up = dist(rng);
    const CellWeightSet w = cell_weight_set(um, uc, up, h, params);
    CHECK(w.w0 + w.wl + w.wr == doctest::Approx(1.0).epsilon(1e-14));
    double sum_m = 0.0, sum_p = 0.0;
    for (int l = 0; l < 3; ++l) {
      const double p0r = (kPoptRight[l] - lin.cl * kPLright[l] -
                          lin.cr * kPRright[l]) / lin.c0;
      const double p0l = (kPoptLeft[l] - lin.cl * kPLleft[l] -
                          lin.cr * kPRleft[l]) / lin.c0;
      const double wm = w.w0 * p0r + w.wl * kPLright[l] + w.wr * kPRright[l];
      const double wp = w.w0 * p0l + w.wl * kPLleft[l] + w.wr * kPRleft[l];
      CHECK(std::fabs(w.wminus[l] - wm) < 1e-13);
      CHECK(std::fabs(w.wplus[l] - wp) < 1e-13);
      sum_m += w.wminus[l];
      sum_p += w.wplus[l];
    }
    CHECK(sum_m == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(sum_p == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("reconstruct_bed: constants and linear data") {
  const Grid g = make_grid(0.0, 1.0, 20);
  StateVector c(g.n_cells);
  for (int j = 0; j < g.n_cells; ++j) c[j] = 4.2;
  const CwenoParams params;
  const auto wc = weight_sets_from_state(c, g.h, params);
  const BedPair bc = reconstruct_bed(c, wc);
  for (int j = 0; j < g.n_cells; ++j) {
    CHECK(bc.u_minus[j] == doctest::Approx(4.2).epsilon(1e-14));
    CHECK(bc.u_plus[j] == doctest::Approx(4.2).epsilon(1e-14));
  }

  // Linear-in-x cell averages: interior edges are reproduced exactly
  // (the periodic wrap cells see the jump and are excluded).
  StateVector lin(g.n_cells);
  for (int j = 0; j < g.n_cells; ++j) lin[j] = 2.0 * g.center(j) - 0.3;
  const auto wl = weight_sets_from_state(lin, g.h, params);
  const BedPair bl = reconstruct_bed(lin, wl);
  for (int j = 2; j < g.n_cells - 3; ++j) {
    const double edge = 2.0 * g.right_edge(j) - 0.3;
    CHECK(bl.u_minus[j] == doctest::Approx(edge).epsilon(1e-12));
    CHECK(bl.u_plus[j] == doctest::Approx(edge).epsilon(1e-12));
  }
}

TEST_CASE("standard bed agrees with the frozen path on the same state") {
  const Grid g = make_grid(-1.0, 1.0, 32);
  const CwenoParams params;
  StateVector u(g.n_cells);
  for (int j = 0; j < g.n_cells; ++j) u[j] = std::sin(kPi * g.center(j));
  const BedPair a = standard_cweno_bed(u, g.h, params);
  const BedPair b = reconstruct_bed(u, weight_sets_from_state(u, g.h, params));
  for (int j = 0; j < g.n_cells; ++j) {
    CHECK(a.u_minus[j] == b.u_minus[j]);
    CHECK(a.u_plus[j] == b.u_plus[j]);
  }
}

TEST_CASE("weights approach the linear ones at rate O(h)") {
  const CwenoParams params;
  double prev_dev = 0.0;
  std::vector<double> devs;
  for (int n : {128, 256, 512}) {
    const Grid g = make_grid(-1.0, 1.0, n);
    StateVector u = project_initial_condition(
        g, [](double x) { return std::sin(kPi * x); });
    const auto ws = weight_sets_from_state(u, g.h, params);
    double dev = 0.0;
    for (const CellWeightSet& w : ws) {
      dev = std::max(dev, std::fabs(w.w0 - params.linear.c0));
      dev = std::max(dev, std::fabs(w.wl - params.linear.cl));
      dev = std::max(dev, std::fabs(w.wr - params.linear.cr));
    }
    devs.push_back(dev);
    prev_dev = dev;
  }
  (void)prev_dev;
  for (size_t i = 1; i < devs.size(); ++i) {
    const double ratio = devs[i - 1] / devs[i];
    CHECK(ratio >= 1.5);
    CHECK(ratio <= 3.0);
  }
}

TEST_CASE("third-order boundary extrapolated data on smooth profiles") {
  const CwenoParams params;
  std::vector<double> errs;
  for (int n : {256, 512}) {
    const Grid g = make_grid(-1.0, 1.0, n);
    StateVector u = project_initial_condition(
        g, [](double x) { return std::sin(kPi * x); });
    const BedPair bed = standard_cweno_bed(u, g.h, params);
    double err = 0.0;
    for (int j = 0; j < g.n_cells; ++j) {
      const double exact = std::sin(kPi * g.right_edge(j));
      err = std::max(err, std::fabs(bed.u_minus[j] - exact));
      err = std::max(err, std::fabs(bed.u_plus[j] - exact));
    }
    errs.push_back(err);
  }
  const double order = std::log2(errs[0] / errs[1]);
  CHECK(order >= 2.7);

  // One-sided jumps of the reconstruction vanish at third order too.
  std::vector<double> jumps;
  for (int n : {256, 512}) {
    const Grid g = make_grid(-1.0, 1.0, n);
    StateVector u = project_initial_condition(
        g, [](double x) { return std::sin(kPi * x); });
    const BedPair bed = standard_cweno_bed(u, g.h, params);
    double jmp = 0.0;
    for (int j = 0; j < g.n_cells; ++j)
      jmp = std::max(jmp, std::fabs(bed.u_plus[j] - bed.u_minus[j]));
    jumps.push_back(jmp);
  }
  CHECK(std::log2(jumps[0] / jumps[1]) >= 2.5);
}

TEST_CASE("step data stays within local stencil bounds") {
  // Small h so the tiny contamination of the non-smooth stencils is far
  // below tolerance.
  const int n = 16;
  const double h = 1e-4;
  StateVector u(n);
  for (int j = 0; j < n; ++j) u[j] = (j >= n / 2) ? 1.0 : 0.0;
  const CwenoParams params;
  const auto ws = weight_sets_from_state(u, h, params);
  const BedPair bed = reconstruct_bed(u, ws);
  for (int j = 1; j < n - 1; ++j) {
    const double lo = std::min({u[j - 1], u[j], u[j + 1]});
    const double hi = std::max({u[j - 1], u[j], u[j + 1]});
    CHECK(bed.u_minus[j] >= lo - 1e-12);
    CHECK(bed.u_minus[j] <= hi + 1e-12);
  }
}

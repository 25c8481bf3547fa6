#include <cmath>
#include <random>

#include "core/fv.hpp"
#include "core/grid.hpp"
#include "core/problem.hpp"
#include "doctest.h"

using namespace quinpi;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Exact cell average of 0.5 - 0.25 sin(pi x) over [a, b].
double sine_smooth_average(double a, double b) {
  return 0.5 + 0.25 * (std::cos(kPi * b) - std::cos(kPi * a)) / (kPi * (b - a));
}
}  // namespace

TEST_CASE("make_grid basics and validation") {
  const Grid g = make_grid(-1.0, 1.0, 400);
  CHECK(g.h == doctest::Approx(0.005).epsilon(1e-15));
  CHECK(make_grid(0.0, 2.0, 256).h == doctest::Approx(2.0 / 256).epsilon(1e-15));
  CHECK(make_grid(0.0, 1.0, 100).h == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(g.center(0) == doctest::Approx(-0.9975));
  CHECK(g.wrap(-1) == 399);
  CHECK(g.wrap(400) == 0);
  CHECK_THROWS_AS(make_grid(1.0, -1.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 4), std::invalid_argument);
}

TEST_CASE("projection: constants, smooth closed form, aligned steps") {
  const Grid g = make_grid(0.0, 2.0, 64);
  const StateVector ones = project_initial_condition(g, [](double) { return 1.0; });
  for (int j = 0; j < g.n_cells; ++j) CHECK(ones[j] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ones.time == 0.0);

  const InitialCondition smooth = ic_sine_smooth();
  const StateVector s = project_initial_condition(g, smooth.value);
  for (int j = 0; j < g.n_cells; ++j) {
    const double exact = sine_smooth_average(g.left_edge(j), g.right_edge(j));
    CHECK(s[j] == doctest::Approx(exact).epsilon(1e-12));
  }

  // Double step with discontinuities on cell edges averages to {0, 1}.
  const Grid g2 = make_grid(-1.0, 1.0, 400);
  const InitialCondition ds = ic_double_step();
  const StateVector d = project_initial_condition(g2, ds.value);
  for (int j = 0; j < g2.n_cells; ++j) {
    const double expected =
        (g2.center(j) > -0.25 && g2.center(j) < 0.25) ? 1.0 : 0.0;
    CHECK(std::fabs(d[j] - expected) < 1e-14);
  }
}

TEST_CASE("projection reproduces polynomials up to degree 4") {
  const Grid g = make_grid(-1.0, 3.0, 17);
  for (int deg = 0; deg <= 4; ++deg) {
    const auto poly = [deg](double x) { return std::pow(x, deg); };
    const StateVector p = project_initial_condition(g, poly);
    for (int j = 0; j < g.n_cells; ++j) {
      const double a = g.left_edge(j), b = g.right_edge(j);
      const double exact =
          (std::pow(b, deg + 1) - std::pow(a, deg + 1)) / ((deg + 1) * g.h);
      CHECK(p[j] == doctest::Approx(exact).epsilon(1e-13));
    }
  }
}

TEST_CASE("lxf flux examples and properties") {
  const Problem bg = burgers();
  CHECK(lxf_flux(1.0, 1.0, bg, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(lxf_flux(0.0, 1.0, bg, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));

  const Problem adv = linear_advection();
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const double ul = dist(rng), ur = dist(rng);
    // alpha = 1 reduces linear advection LxF to pure upwind.
    CHECK(lxf_flux(ul, ur, adv, 1.0) == doctest::Approx(ul).epsilon(1e-14));
    const double a = dist(rng);
    CHECK(lxf_flux(a, a, bg, 0.5) == bg.flux(a));  // exact consistency
  }

  // Monotone in u_left (up) and u_right (down) when alpha covers |f'|.
  std::uniform_real_distribution<double> u01(-1.0, 1.0);
  const double alpha = 0.5;  // |f'(u)| = |u|/2 <= 0.5 on [-1,1]
  for (int i = 0; i < 200; ++i) {
    const double ul = u01(rng), ur = u01(rng), d = 1e-6;
    CHECK(lxf_flux(ul + d, ur, bg, alpha) >= lxf_flux(ul, ur, bg, alpha) - 1e-15);
    CHECK(lxf_flux(ul, ur + d, bg, alpha) <= lxf_flux(ul, ur, bg, alpha) + 1e-15);
  }
}

TEST_CASE("max_wave_speed") {
  StateVector u(4);
  u[0] = 0.25; u[1] = 0.5; u[2] = 0.75; u[3] = 0.3;
  CHECK(max_wave_speed(linear_advection(), u) == doctest::Approx(1.0));
  CHECK(max_wave_speed(burgers(), u) == doctest::Approx(0.375).epsilon(1e-15));

  const Problem bl = buckley_leverett();
  StateVector v(3);
  v[0] = 0.0; v[1] = 0.25; v[2] = 0.5;
  double expect = 0.0;
  for (int j = 0; j < 3; ++j)
    expect = std::max(expect, std::fabs(bl.flux_derivative(v[j])));
  CHECK(max_wave_speed(bl, v) == doctest::Approx(expect).epsilon(1e-15));
  CHECK(max_wave_speed(bl, v, 0.1) == doctest::Approx(1.1 * expect).epsilon(1e-15));
}

TEST_CASE("flux derivatives match finite differences") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0.05, 0.95);
  for (const Problem& p : {linear_advection(), burgers(), buckley_leverett()}) {
    for (int i = 0; i < 50; ++i) {
      const double u = dist(rng), d = 1e-6;
      const double fd = (p.flux(u + d) - p.flux(u - d)) / (2 * d);
      CHECK(p.flux_derivative(u) == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("norms, total variation, mass") {
  const Grid g = make_grid(0.0, 1.0, 100);
  StateVector u(100);
  std::vector<double> ref(100, 0.0);
  CHECK(l1_error(g, u, ref) == 0.0);
  CHECK(linf_error(u, ref) == 0.0);
  u[17] = 1.0;
  CHECK(l1_error(g, u, ref) == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(linf_error(u, ref) == doctest::Approx(1.0));

  StateVector c(64);
  for (int j = 0; j < 64; ++j) c[j] = 3.5;
  CHECK(total_variation(c) == 0.0);

  const Grid g2 = make_grid(-1.0, 1.0, 400);
  const StateVector d = project_initial_condition(g2, ic_double_step().value);
  CHECK(total_variation(d) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(total_mass(g2, d) == doctest::Approx(0.5).epsilon(1e-13));

  // Monotone ramp: periodic TV equals twice the range.
  StateVector ramp(10);
  for (int j = 0; j < 10; ++j) ramp[j] = 0.3 * j;
  CHECK(total_variation(ramp) == doctest::Approx(2.0 * 0.3 * 9).epsilon(1e-13));

  // Translation invariance under periodic rotation.
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  StateVector r(50), rot(50);
  for (int j = 0; j < 50; ++j) r[j] = dist(rng);
  for (int j = 0; j < 50; ++j) rot[j] = r[(j + 13) % 50];
  const Grid g3 = make_grid(0.0, 1.0, 50);
  CHECK(total_variation(rot) == doctest::Approx(total_variation(r)).epsilon(1e-13));
  CHECK(total_mass(g3, rot) == doctest::Approx(total_mass(g3, r)).epsilon(1e-13));
}

TEST_CASE("initial conditions match their formulas") {
  const InitialCondition sj = ic_sine_jump();
  CHECK(sj.value(0.0) == doctest::Approx(3.0));             // inside the step
  CHECK(sj.value(0.5) == doctest::Approx(1.0));             // sin(pi/2)
  CHECK(sj.value(-0.5) == doctest::Approx(-1.0));
  const InitialCondition ts = ic_two_shock();
  CHECK(ts.value(0.25) ==
        doctest::Approx(0.2 - std::sin(kPi * 0.25) + std::sin(kPi * 0.5)));
  const InitialCondition hs = ic_half_step();
  CHECK(hs.value(0.1) == doctest::Approx(0.5));
  CHECK(hs.value(0.5) == doctest::Approx(0.0));
  CHECK(hs.value(0.9) == doctest::Approx(0.5));
  const InitialCondition ss = ic_sine_smooth();
  CHECK(ss.value(0.5) == doctest::Approx(0.25));
  CHECK(ss.derivative(0.5) == doctest::Approx(0.0).epsilon(1e-12));
}

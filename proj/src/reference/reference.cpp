#include "reference/reference.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "la/cyclic_banded.hpp"

namespace quinpi {

namespace {

// L(u) = -(F_{j+1/2} - F_{j-1/2}) / h with fully nonlinear CWENO BED.
std::vector<double> rhs_cweno(const Grid& grid, const StateVector& u,
                              const Problem& problem, double alpha,
                              const CwenoParams& params) {
  const BedPair bed = standard_cweno_bed(u, grid.h, params);
  const int n = u.size();
  std::vector<double> f(n), out(n);
  for (int j = 0; j < n; ++j)
    f[j] = lxf_flux(bed.u_minus[j], bed.u_plus[j], problem, alpha);
  for (int j = 0; j < n; ++j)
    out[j] = -(f[j] - f[(j + n - 1) % n]) / grid.h;
  return out;
}

}  // namespace

StateVector ssprk3_step(const Grid& grid, const StateVector& u_n, double dt,
                        const Problem& problem, double alpha,
                        const CwenoParams& params) {
  if (alpha > 0.0 && dt > 0.9 * grid.h / alpha)
    throw std::invalid_argument("ssprk3_step: CFL violation");
  const int n = u_n.size();

  StateVector u1(n), u2(n), out(n, u_n.time + dt);
  std::vector<double> l = rhs_cweno(grid, u_n, problem, alpha, params);
  for (int j = 0; j < n; ++j) u1[j] = u_n[j] + dt * l[j];
  l = rhs_cweno(grid, u1, problem, alpha, params);
  for (int j = 0; j < n; ++j)
    u2[j] = 0.75 * u_n[j] + 0.25 * (u1[j] + dt * l[j]);
  l = rhs_cweno(grid, u2, problem, alpha, params);
  for (int j = 0; j < n; ++j)
    out[j] = u_n[j] / 3.0 + 2.0 / 3.0 * (u2[j] + dt * l[j]);
  return out;
}

double exact_linear(const ScalarFn& u0, double x, double t, double x_min,
                    double x_max) {
  const double period = x_max - x_min;
  double y = x - t;
  y = y - period * std::floor((y - x_min) / period);
  return u0(y);
}

double exact_burgers_preshock(const ScalarFn& u0, const ScalarFn& u0_prime,
                              double x, double t) {
  // Solve u = u0(x - u t / 2) by damped Newton.
  double u = u0(x);
  auto g = [&](double v) { return v - u0(x - 0.5 * v * t); };
  double gv = g(u);
  for (int it = 0; it < 100; ++it) {
    if (std::fabs(gv) <= 1e-13) return u;
    double slope;
    if (u0_prime) {
      slope = 1.0 + 0.5 * t * u0_prime(x - 0.5 * u * t);
    } else {
      const double d = 1e-7 * (1.0 + std::fabs(u));
      slope = (g(u + d) - gv) / d;
    }
    if (slope == 0.0) break;
    double step = gv / slope;
    // halve the step until the residual decreases
    for (int damp = 0; damp < 50; ++damp) {
      const double trial = u - step;
      const double gt = g(trial);
      if (std::fabs(gt) < std::fabs(gv)) {
        u = trial;
        gv = gt;
        break;
      }
      step *= 0.5;
    }
  }
  if (std::fabs(gv) > 1e-13)
    throw std::runtime_error(
        "exact_burgers_preshock: no convergence (t too close to shock?)");
  return u;
}

double burgers_shock_time(const ScalarFn& u0, double x_min, double x_max) {
  // t* = -1 / min_x d/dx f'(u0(x)), f'(u) = u/2, sampled on 1e4 points.
  const int samples = 10000;
  const double dx = (x_max - x_min) / samples;
  double min_slope = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = x_min + (i + 0.5) * dx;
    const double s = 0.5 * (u0(x + 0.5 * dx) - u0(x - 0.5 * dx)) / dx;
    min_slope = std::min(min_slope, s);
  }
  if (min_slope >= 0.0) return std::numeric_limits<double>::infinity();
  return -1.0 / min_slope;
}

StateVector fine_grid_reference(const Grid& coarse, const Problem& problem,
                                const ScalarFn& u0, double t_final, int factor,
                                const CwenoParams& params) {
  if (factor < 1)
    throw std::invalid_argument("fine_grid_reference: factor must be >= 1");
  const Grid fine =
      make_grid(coarse.x_min, coarse.x_max, coarse.n_cells * factor);
  StateVector u = project_initial_condition(fine, u0);
  const double cfl = 0.45;
  while (u.time < t_final - 1e-14) {
    const double alpha = std::max(max_wave_speed(problem, u), 1e-12);
    double dt = cfl * fine.h / alpha;
    dt = std::min(dt, t_final - u.time);
    u = ssprk3_step(fine, u, dt, problem, alpha, params);
  }
  StateVector out(coarse.n_cells, u.time);
  for (int j = 0; j < coarse.n_cells; ++j) {
    double acc = 0.0;
    for (int i = 0; i < factor; ++i) acc += u[j * factor + i];
    out[j] = acc / factor;
  }
  return out;
}

StateVector implicit_upwind_step(const StateVector& u_n, double nu) {
  const int n = u_n.size();
  CyclicBandedMatrix m(n, 1);
  for (int j = 0; j < n; ++j) {
    m.at(j, 0) = 1.0 + nu;
    m.at(j, -1) = -nu;
  }
  StateVector out(n, u_n.time);
  out.values = cyclic_banded_solve(m, u_n.values);
  return out;
}

}  // namespace quinpi

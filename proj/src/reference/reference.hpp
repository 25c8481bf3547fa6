#ifndef QUINPI_REFERENCE_REFERENCE_HPP
#define QUINPI_REFERENCE_REFERENCE_HPP

#include "core/fv.hpp"
#include "core/grid.hpp"
#include "core/problem.hpp"
#include "core/state.hpp"
#include "cweno/cweno.hpp"

namespace quinpi {

// Shu-Osher SSP-RK3 with fully nonlinear CWENO reconstruction; requires
// dt <= 0.9 h / alpha.
StateVector ssprk3_step(const Grid& grid, const StateVector& u_n, double dt,
                        const Problem& problem, double alpha,
                        const CwenoParams& params = {});

// Periodic shift of u0 for u_t + u_x = 0.
double exact_linear(const ScalarFn& u0, double x, double t, double x_min,
                    double x_max);

// Characteristics solution of Burgers (f = u^2/4) before shock formation.
// u0_prime may be null; the secant fallback is used in the Newton update.
double exact_burgers_preshock(const ScalarFn& u0, const ScalarFn& u0_prime,
                              double x, double t);

// Earliest characteristic crossing time of u0, sampled on [x_min, x_max].
double burgers_shock_time(const ScalarFn& u0, double x_min, double x_max);

// Explicit run at CFL 0.45 on n_fine = factor * coarse cells, block-averaged
// back onto the coarse grid.  factor must be >= 1 (>= 8 for real references).
StateVector fine_grid_reference(const Grid& coarse, const Problem& problem,
                                const ScalarFn& u0, double t_final, int factor,
                                const CwenoParams& params = {});

// First-order implicit upwind for u_t + u_x = 0:
// (1 + nu) u_j - nu u_{j-1} = u^n_j periodically.
StateVector implicit_upwind_step(const StateVector& u_n, double nu);

}  // namespace quinpi

#endif

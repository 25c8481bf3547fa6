#ifndef QUINPI_CORE_FV_HPP
#define QUINPI_CORE_FV_HPP

#include <vector>

#include "core/grid.hpp"
#include "core/problem.hpp"
#include "core/state.hpp"

namespace quinpi {

// Lax-Friedrichs numerical flux with artificial viscosity speed alpha.
inline double lxf_flux(double u_left, double u_right, const Problem& problem,
                       double alpha) {
  return 0.5 * (problem.flux(u_right) + problem.flux(u_left) -
                alpha * (u_right - u_left));
}

// (1+margin) * max_j |f'(u_j)| over the current cell averages.
double max_wave_speed(const Problem& problem, const StateVector& state,
                      double margin = 0.0);

// Cell averages of u0 by 5-point Gauss-Legendre quadrature per cell.
StateVector project_initial_condition(const Grid& grid, const ScalarFn& u0);

double l1_error(const Grid& grid, const StateVector& state,
                const std::vector<double>& reference);
double linf_error(const StateVector& state,
                  const std::vector<double>& reference);

// Periodic total variation, including the wrap-around jump.
double total_variation(const StateVector& state);

double total_mass(const Grid& grid, const StateVector& state);

}  // namespace quinpi

#endif

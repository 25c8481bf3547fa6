#include "core/fv.hpp"

#include <cmath>
#include <stdexcept>

namespace quinpi {

namespace {
// 5-point Gauss-Legendre rule on [-1, 1]; exact through degree 9.
constexpr double kGaussNode[5] = {
    0.0, 0.5384693101056831, -0.5384693101056831, 0.9061798459386640,
    -0.9061798459386640};
constexpr double kGaussWeight[5] = {
    0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
    0.2369268850561891, 0.2369268850561891};
}  // namespace

double max_wave_speed(const Problem& problem, const StateVector& state,
                      double margin) {
  if (state.size() == 0)
    throw std::invalid_argument("max_wave_speed: empty state");
  double m = 0.0;
  for (double u : state.values) m = std::max(m, std::fabs(problem.flux_derivative(u)));
  return (1.0 + margin) * m;
}

StateVector project_initial_condition(const Grid& grid, const ScalarFn& u0) {
  StateVector s(grid.n_cells, 0.0);
  for (int j = 0; j < grid.n_cells; ++j) {
    const double xc = grid.center(j);
    double acc = 0.0;
    for (int q = 0; q < 5; ++q)
      acc += kGaussWeight[q] * u0(xc + 0.5 * grid.h * kGaussNode[q]);
    s[j] = 0.5 * acc;  // the 1/h and the h/2 of the substitution combine
  }
  return s;
}

double l1_error(const Grid& grid, const StateVector& state,
                const std::vector<double>& reference) {
  if (state.values.size() != reference.size())
    throw std::invalid_argument("l1_error: length mismatch");
  double acc = 0.0;
  for (int j = 0; j < state.size(); ++j)
    acc += std::fabs(state[j] - reference[j]);
  return grid.h * acc;
}

double linf_error(const StateVector& state,
                  const std::vector<double>& reference) {
  if (state.values.size() != reference.size())
    throw std::invalid_argument("linf_error: length mismatch");
  double m = 0.0;
  for (int j = 0; j < state.size(); ++j)
    m = std::max(m, std::fabs(state[j] - reference[j]));
  return m;
}

double total_variation(const StateVector& state) {
  const int n = state.size();
  double tv = 0.0;
  for (int j = 0; j < n; ++j)
    tv += std::fabs(state[j] - state[(j + n - 1) % n]);
  return tv;
}

double total_mass(const Grid& grid, const StateVector& state) {
  double acc = 0.0;
  for (double u : state.values) acc += u;
  return grid.h * acc;
}

}  // namespace quinpi

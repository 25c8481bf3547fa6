#ifndef QUINPI_CORE_PROBLEM_HPP
#define QUINPI_CORE_PROBLEM_HPP

#include <functional>
#include <optional>
#include <string>

namespace quinpi {

using ScalarFn = std::function<double(double)>;

// A scalar conservation law u_t + f(u)_x = 0 together with the analytic
// flux derivative.
struct Problem {
  std::string name;
  ScalarFn flux;
  ScalarFn flux_derivative;
};

Problem linear_advection();          // f(u) = u
Problem burgers();                   // f(u) = (u/2)^2
Problem buckley_leverett();          // f(u) = u^2 / (u^2 + (1-u)^2/3)

// Pointwise initial profile with its derivative (where meaningful) and the
// default domain the standard test setups use.
struct InitialCondition {
  std::string name;
  ScalarFn value;
  ScalarFn derivative;  // null for the discontinuous profiles
  double x_min = -1.0;
  double x_max = 1.0;
};

InitialCondition ic_sine_smooth();  // 0.5 - 0.25 sin(pi x) on [0,2]
InitialCondition ic_sine_jump();    // sin(pi x) + step on [-1,1]
InitialCondition ic_double_step();  // 1 on [-0.25,0.25] on [-1,1]
InitialCondition ic_two_shock();    // 0.2 - sin(pi x) + sin(2 pi x) on [-1,1]
InitialCondition ic_half_step();    // 0.5 on [0,0.25]u[0.75,1] on [0,1]

}  // namespace quinpi

#endif

#include "core/problem.hpp"

#include <cmath>

namespace quinpi {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Problem linear_advection() {
  Problem p;
  p.name = "advection";
  p.flux = [](double u) { return u; };
  p.flux_derivative = [](double) { return 1.0; };
  return p;
}

Problem burgers() {
  Problem p;
  p.name = "burgers";
  p.flux = [](double u) { return 0.25 * u * u; };
  p.flux_derivative = [](double u) { return 0.5 * u; };
  return p;
}

Problem buckley_leverett() {
  Problem p;
  p.name = "buckley-leverett";
  p.flux = [](double u) {
    const double w = 1.0 - u;
    return u * u / (u * u + w * w / 3.0);
  };
  // d/du of the rational flux collapses to (2/3) u (1-u) / D^2.
  p.flux_derivative = [](double u) {
    const double w = 1.0 - u;
    const double d = u * u + w * w / 3.0;
    return (2.0 / 3.0) * u * w / (d * d);
  };
  return p;
}

InitialCondition ic_sine_smooth() {
  InitialCondition ic;
  ic.name = "sine-smooth";
  ic.value = [](double x) { return 0.5 - 0.25 * std::sin(kPi * x); };
  ic.derivative = [](double x) { return -0.25 * kPi * std::cos(kPi * x); };
  ic.x_min = 0.0;
  ic.x_max = 2.0;
  return ic;
}

InitialCondition ic_sine_jump() {
  InitialCondition ic;
  ic.name = "sine-jump";
  ic.value = [](double x) {
    const double base = std::sin(kPi * x);
    return (x >= -0.4 && x <= 0.4) ? base + 3.0 : base;
  };
  ic.x_min = -1.0;
  ic.x_max = 1.0;
  return ic;
}

InitialCondition ic_double_step() {
  InitialCondition ic;
  ic.name = "double-step";
  ic.value = [](double x) { return (x >= -0.25 && x <= 0.25) ? 1.0 : 0.0; };
  ic.x_min = -1.0;
  ic.x_max = 1.0;
  return ic;
}

InitialCondition ic_two_shock() {
  InitialCondition ic;
  ic.name = "two-shock";
  ic.value = [](double x) {
    return 0.2 - std::sin(kPi * x) + std::sin(2.0 * kPi * x);
  };
  ic.derivative = [](double x) {
    return -kPi * std::cos(kPi * x) + 2.0 * kPi * std::cos(2.0 * kPi * x);
  };
  ic.x_min = -1.0;
  ic.x_max = 1.0;
  return ic;
}

InitialCondition ic_half_step() {
  InitialCondition ic;
  ic.name = "half-step";
  // The [-0.25, 0.25] plateau read periodically on [0,1].
  ic.value = [](double x) {
    double y = x - std::floor(x);
    return (y <= 0.25 || y >= 0.75) ? 0.5 : 0.0;
  };
  ic.x_min = 0.0;
  ic.x_max = 1.0;
  return ic;
}

}  // namespace quinpi

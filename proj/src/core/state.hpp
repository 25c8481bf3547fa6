#ifndef QUINPI_CORE_STATE_HPP
#define QUINPI_CORE_STATE_HPP

#include <vector>

namespace quinpi {

// Cell averages at one time level.
struct StateVector {
  std::vector<double> values;
  double time = 0.0;

  StateVector() = default;
  StateVector(int n, double t = 0.0) : values(n, 0.0), time(t) {}

  int size() const { return static_cast<int>(values.size()); }
  double& operator[](int j) { return values[j]; }
  double operator[](int j) const { return values[j]; }
};

}  // namespace quinpi

#endif

#ifndef QUINPI_CORE_GRID_HPP
#define QUINPI_CORE_GRID_HPP

#include <stdexcept>

namespace quinpi {

// Uniform periodic 1D mesh of n cells on [x_min, x_max].
struct Grid {
  double x_min = 0.0;
  double x_max = 1.0;
  int n_cells = 0;
  double h = 0.0;

  double center(int j) const { return x_min + (j + 0.5) * h; }
  double left_edge(int j) const { return x_min + j * h; }
  double right_edge(int j) const { return x_min + (j + 1) * h; }

  // Periodic index arithmetic; accepts any j within +-n_cells of range.
  int wrap(int j) const {
    if (j < 0) return j + n_cells;
    if (j >= n_cells) return j - n_cells;
    return j;
  }
};

inline Grid make_grid(double x_min, double x_max, int n_cells) {
  if (!(x_max > x_min))
    throw std::invalid_argument("make_grid: x_max must exceed x_min");
  if (n_cells < 5)
    throw std::invalid_argument("make_grid: need at least 5 cells");
  Grid g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.n_cells = n_cells;
  g.h = (x_max - x_min) / n_cells;
  return g;
}

}  // namespace quinpi

#endif

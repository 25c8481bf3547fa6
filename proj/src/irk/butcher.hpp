#ifndef QUINPI_IRK_BUTCHER_HPP
#define QUINPI_IRK_BUTCHER_HPP

#include <vector>

namespace quinpi {

// Lower-triangular (DIRK) Butcher tableau.
struct ButcherTableau {
  int stages = 0;
  std::vector<std::vector<double>> a;  // stages x stages, a[k][l] = 0 for l > k
  std::vector<double> b;
  std::vector<double> c;
};

// Three-stage, third-order, stiffly accurate scheme with
// lambda = 0.4358665215.
ButcherTableau dirk3_tableau();

// Chained backward-Euler substeps through the sorted abscissae of dirk.
ButcherTableau composite_euler_tableau(const ButcherTableau& dirk);

}  // namespace quinpi

#endif

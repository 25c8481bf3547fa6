#ifndef QUINPI_CWENO_CWENO_HPP
#define QUINPI_CWENO_CWENO_HPP

#include <array>
#include <vector>

#include "core/grid.hpp"
#include "core/state.hpp"

namespace quinpi {

// Optimal coefficients of the third-order CWENO blend.
struct LinearWeights {
  double c0 = 0.5;
  double cl = 0.25;
  double cr = 0.25;
};

// Parabola a + b (x-x_j) + c (x-x_j)^2 matching three cell averages.
struct PolyCoeffs {
  double a = 0.0;
  double b = 0.0;  // per unit length
  double c = 0.0;  // per unit length squared
};

// Nonlinear weights of one cell together with the collapsed edge
// coefficients: the reconstruction evaluated at the right (wminus) and left
// (wplus) cell edge, each as a 3-point linear map on (u_{j-1}, u_j, u_{j+1}).
struct CellWeightSet {
  double w0 = 0.0, wl = 0.0, wr = 0.0;
  std::array<double, 3> wminus{};
  std::array<double, 3> wplus{};
};

// Boundary extrapolated data at all interfaces; entry j is interface j+1/2.
struct BedPair {
  std::vector<double> u_minus;
  std::vector<double> u_plus;
};

struct CwenoParams {
  LinearWeights linear;
  double tau = 2.0;
  // eps_x defaults to h^2, applied where the stencil is consumed
};

PolyCoeffs optimal_poly(double u_m, double u_c, double u_p, double h);

// Jiang-Shu indicators (I_L, I_0, I_R); h cancels except through eps.
struct Indicators {
  double left = 0.0, center = 0.0, right = 0.0;
};
Indicators smoothness_indicators(double u_m, double u_c, double u_p);

struct NonlinearWeights {
  double w0 = 0.0, wl = 0.0, wr = 0.0;
};
NonlinearWeights nonlinear_weights(const Indicators& ind,
                                   const LinearWeights& linear, double eps,
                                   double tau);

CellWeightSet cell_weight_set(double u_m, double u_c, double u_p, double h,
                              const CwenoParams& params);

// BED from frozen per-cell weights; linear in the state.
BedPair reconstruct_bed(const StateVector& state,
                        const std::vector<CellWeightSet>& weights);

// Fully nonlinear CWENO: weights from the state's own stencils.
BedPair standard_cweno_bed(const StateVector& state, double h,
                           const CwenoParams& params);

std::vector<CellWeightSet> weight_sets_from_state(const StateVector& state,
                                                  double h,
                                                  const CwenoParams& params);

}  // namespace quinpi

#endif

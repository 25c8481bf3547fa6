#ifndef QUINPI_QUINPI_STEP_HPP
#define QUINPI_QUINPI_STEP_HPP

#include <array>
#include <vector>

#include "core/fv.hpp"
#include "core/grid.hpp"
#include "core/problem.hpp"
#include "core/state.hpp"
#include "cweno/cweno.hpp"
#include "irk/butcher.hpp"
#include "irk/newton.hpp"

namespace quinpi {

struct QuinpiConfig {
  CwenoParams cweno;
  int eps_t_exponent = 2;              // eps_t = dt^exponent
  double blend_tau = 2.0;
  bool conservative_correction = true;
  bool explicit_predictor = false;
  int max_newton_iter = 50;
};

// Everything one Runge-Kutta pass leaves behind: stage states and interface
// fluxes, the frozen weight sets (corrector only), and the flux-form end
// state so the update is conservative by construction.
struct StageBundle {
  std::vector<StateVector> stage_states;
  std::vector<std::vector<double>> stage_fluxes;      // F^{(k)}_{j+1/2}
  std::vector<std::vector<CellWeightSet>> stage_weight_sets;
  StateVector end_state;
  std::vector<double> end_flux;                       // sum_k b_k F^{(k)}
  std::vector<NewtonReport> newton_reports;
};

// Degree-3 polynomial in normalized time s = (t - t^n)/dt.
struct CeCubic {
  double p0 = 0.0, p1 = 0.0, p2 = 0.0, p3 = 0.0;
  double value(double s) const {
    return p0 + s * (p1 + s * (p2 + s * p3));
  }
  double derivative(double s) const {  // d/ds
    return p1 + s * (2.0 * p2 + s * 3.0 * p3);
  }
};

struct BlendWeights {
  std::vector<double> wh, wl;
  double ch = 0.0, cl = 0.0, eps_t = 0.0;
  std::vector<double> i_t, i_x_minus, i_x_plus, i3;
};

struct StepDiagnostics {
  std::vector<NewtonReport> newton_reports;  // predictor then corrector
  int newton_total = 0;
  BlendWeights blend;
  std::vector<double> mass_defects;
};

// Composite backward Euler through the sorted DIRK3 abscissae, piecewise
// constant in space.  With config.explicit_predictor the substeps are
// forward Euler at the same abscissae.
StageBundle predictor_step(const Grid& grid, const StateVector& u_n, double dt,
                           const Problem& problem, double alpha,
                           const QuinpiConfig& config);

// DIRK3 stages with CWENO weights frozen from the matching predictor stage.
StageBundle corrector_step(const Grid& grid, const StateVector& u_n,
                           const StageBundle& predictor, double dt,
                           const Problem& problem, double alpha,
                           const QuinpiConfig& config);

// Cubic with P(0) = u_n_j and dP/dt = K_k at the abscissae (normalized time).
CeCubic ce_cubic(double u_n_j, const std::array<double, 3>& stage_derivatives,
                 const std::array<double, 3>& c, double dt);

// Jiang-Shu indicator of the cubic over the step; closed form, and free of
// residual dt powers after the normalized-time substitution.
double time_smoothness_indicator(const CeCubic& ce);

void space_time_indicators(const StateVector& u_n, const StateVector& stage1,
                           const StateVector& stage2, const StateVector& u_np1,
                           std::vector<double>& i_x_minus,
                           std::vector<double>& i_x_plus);

BlendWeights blend_weights(const std::vector<double>& i3, double dt,
                           double eps_t, double tau);

StateVector blend(const StateVector& u_d3p1, const StateVector& u_ie,
                  const BlendWeights& w);

// Interface mass defect of the cell-centered blending; entry j is mu_{j+1/2}.
std::vector<double> mass_defect(const BlendWeights& w,
                                const std::vector<double>& flux_d3p1,
                                const std::vector<double>& flux_ie, double dt,
                                double h);

StateVector redistribute(const StateVector& u_b, const std::vector<double>& mu,
                         const std::vector<double>& wh);

struct StepResult {
  StateVector u_ie, u_d3p1, u_q3p1;
  StepDiagnostics diag;
};

// Full pipeline: predictor, corrector, time indicators, blending, and the
// conservative correction.
StepResult quinpi_step(const Grid& grid, const StateVector& u_n, double dt,
                       const Problem& problem, const QuinpiConfig& config);

StateVector q3p1_step(const Grid& grid, const StateVector& u_n, double dt,
                      const Problem& problem, const QuinpiConfig& config,
                      StepDiagnostics* diag = nullptr);

}  // namespace quinpi

#endif

#ifndef QUINPI_DRIVER_DRIVER_HPP
#define QUINPI_DRIVER_DRIVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/fv.hpp"
#include "core/grid.hpp"
#include "core/problem.hpp"
#include "core/state.hpp"
#include "quinpi/step.hpp"

namespace quinpi {

enum class ProblemId { Advection, Burgers, BuckleyLeverett };
enum class IcId { SineSmooth, SineJump, DoubleStep, TwoShock, HalfStep };
enum class SchemeId { IE, D3P1, Q3P1, SSPRK3 };

struct RunConfig {
  ProblemId problem = ProblemId::Advection;
  IcId ic = IcId::SineSmooth;
  SchemeId scheme = SchemeId::Q3P1;
  int n_cells = 100;
  double nu = 1.0;       // dt = nu * h for the implicit schemes
  double cfl = 0.0;      // if > 0, dt = cfl * h / alpha0 instead
  double t_final = 1.0;
  int eps_t_exponent = 2;
  bool conservative_correction = true;
  bool explicit_predictor = false;
  LinearWeights linear_weights;
  // Domain; if x_min == x_max the IC's default domain is used.
  double x_min = 0.0;
  double x_max = 0.0;
};

Problem make_problem(ProblemId id);
InitialCondition make_ic(IcId id);

struct StepRecord {
  double time = 0.0;
  double mass_deviation = 0.0;
  double total_variation = 0.0;
  double step_seconds = 0.0;
  int newton_iterations = 0;
};

struct RunResult {
  Grid grid;
  StateVector solution;
  std::vector<StepRecord> steps;
};

// Steppable simulation.  For the nu-based implicit schemes the step count
// is rounded up so that uniform steps of size <= nu*h land exactly on
// t_final; CFL-based runs clip the final step instead.
class Simulation {
 public:
  explicit Simulation(const RunConfig& cfg);

  bool done() const;
  void advance();            // one step; throws on solver failure
  void run();                // steps until done

  const Grid& grid() const { return grid_; }
  const StateVector& state() const { return state_; }
  const std::vector<StepRecord>& steps() const { return steps_; }
  double initial_mass() const { return initial_mass_; }

 private:
  double next_dt() const;

  RunConfig cfg_;
  Problem problem_;
  Grid grid_;
  StateVector state_;
  QuinpiConfig qcfg_;
  double initial_mass_ = 0.0;
  double uniform_dt_ = 0.0;  // > 0 for nu-based stepping
  std::vector<StepRecord> steps_;
};

RunResult run_simulation(const RunConfig& cfg);

// Cell averages of the exact solution at time t (Gauss-Legendre projection
// of the pointwise exact solution).  Empty optional when no exact solution
// exists for the setup.
std::optional<std::vector<double>> exact_cell_averages(const RunConfig& cfg,
                                                       double t);

std::vector<double> reference_cell_averages(const RunConfig& cfg, int factor);

Grid grid_for(const RunConfig& cfg);

}  // namespace quinpi

#endif

#include "driver/driver.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "reference/reference.hpp"

namespace quinpi {

Problem make_problem(ProblemId id) {
  switch (id) {
    case ProblemId::Advection: return linear_advection();
    case ProblemId::Burgers: return burgers();
    case ProblemId::BuckleyLeverett: return buckley_leverett();
  }
  throw std::invalid_argument("make_problem: unknown problem");
}

InitialCondition make_ic(IcId id) {
  switch (id) {
    case IcId::SineSmooth: return ic_sine_smooth();
    case IcId::SineJump: return ic_sine_jump();
    case IcId::DoubleStep: return ic_double_step();
    case IcId::TwoShock: return ic_two_shock();
    case IcId::HalfStep: return ic_half_step();
  }
  throw std::invalid_argument("make_ic: unknown initial condition");
}

Grid grid_for(const RunConfig& cfg) {
  double x_min = cfg.x_min, x_max = cfg.x_max;
  if (x_min == x_max) {
    const InitialCondition ic = make_ic(cfg.ic);
    x_min = ic.x_min;
    x_max = ic.x_max;
  }
  return make_grid(x_min, x_max, cfg.n_cells);
}

Simulation::Simulation(const RunConfig& cfg)
    : cfg_(cfg), problem_(make_problem(cfg.problem)), grid_(grid_for(cfg)) {
  if (cfg.t_final <= 0.0)
    throw std::invalid_argument("Simulation: t_final must be > 0");
  if (cfg.nu <= 0.0 && cfg.cfl <= 0.0)
    throw std::invalid_argument("Simulation: need nu > 0 or cfl > 0");
  if (cfg.eps_t_exponent != 2 && cfg.eps_t_exponent != 3)
    throw std::invalid_argument("Simulation: eps_t_exponent must be 2 or 3");
  const InitialCondition ic = make_ic(cfg.ic);
  state_ = project_initial_condition(grid_, ic.value);
  initial_mass_ = total_mass(grid_, state_);
  qcfg_.cweno.linear = cfg.linear_weights;
  qcfg_.eps_t_exponent = cfg.eps_t_exponent;
  qcfg_.conservative_correction = cfg.conservative_correction;
  qcfg_.explicit_predictor = cfg.explicit_predictor;
  if (cfg.scheme != SchemeId::SSPRK3 && cfg.cfl <= 0.0) {
    const int n_steps = static_cast<int>(
        std::ceil(cfg.t_final / (cfg.nu * grid_.h) - 1e-12));
    uniform_dt_ = cfg.t_final / std::max(n_steps, 1);
  }
}

bool Simulation::done() const { return state_.time >= cfg_.t_final - 1e-13; }

double Simulation::next_dt() const {
  double dt;
  if (cfg_.scheme == SchemeId::SSPRK3) {
    const double cfl = cfg_.cfl > 0.0 ? cfg_.cfl : 0.45;
    const double alpha = std::max(max_wave_speed(problem_, state_), 1e-12);
    dt = cfl * grid_.h / alpha;
  } else if (cfg_.cfl > 0.0) {
    const double alpha = std::max(max_wave_speed(problem_, state_), 1e-12);
    dt = cfg_.cfl * grid_.h / alpha;
  } else {
    dt = uniform_dt_;
  }
  return std::min(dt, cfg_.t_final - state_.time);
}

void Simulation::advance() {
  if (done()) return;
  const double dt = next_dt();
  const auto t0 = std::chrono::steady_clock::now();
  StepRecord rec;
  if (cfg_.scheme == SchemeId::SSPRK3) {
    const double alpha = std::max(max_wave_speed(problem_, state_), 1e-12);
    state_ = ssprk3_step(grid_, state_, dt, problem_, alpha, qcfg_.cweno);
  } else if (cfg_.scheme == SchemeId::IE) {
    const double alpha = max_wave_speed(problem_, state_);
    StageBundle b = predictor_step(grid_, state_, dt, problem_, alpha, qcfg_);
    for (const NewtonReport& r : b.newton_reports)
      rec.newton_iterations += r.iterations;
    state_ = std::move(b.end_state);
  } else {
    StepResult r = quinpi_step(grid_, state_, dt, problem_, qcfg_);
    rec.newton_iterations = r.diag.newton_total;
    state_ = cfg_.scheme == SchemeId::D3P1 ? std::move(r.u_d3p1)
                                           : std::move(r.u_q3p1);
  }
  const auto t1 = std::chrono::steady_clock::now();
  rec.time = state_.time;
  rec.mass_deviation = total_mass(grid_, state_) - initial_mass_;
  rec.total_variation = total_variation(state_);
  rec.step_seconds = std::chrono::duration<double>(t1 - t0).count();
  steps_.push_back(rec);
}

void Simulation::run() {
  while (!done()) advance();
}

RunResult run_simulation(const RunConfig& cfg) {
  Simulation sim(cfg);
  sim.run();
  return {sim.grid(), sim.state(), sim.steps()};
}

std::optional<std::vector<double>> exact_cell_averages(const RunConfig& cfg,
                                                       double t) {
  const Grid grid = grid_for(cfg);
  const InitialCondition ic = make_ic(cfg.ic);
  if (cfg.problem == ProblemId::Advection) {
    const auto fn = [&](double x) {
      return exact_linear(ic.value, x, t, grid.x_min, grid.x_max);
    };
    return project_initial_condition(grid, fn).values;
  }
  if (cfg.problem == ProblemId::Burgers && ic.derivative) {
    const double t_star =
        burgers_shock_time(ic.value, grid.x_min, grid.x_max);
    if (!(t <= 0.95 * t_star)) return std::nullopt;
    const auto fn = [&](double x) {
      // evaluate through the periodic extension of the characteristics
      return exact_burgers_preshock(ic.value, ic.derivative, x, t);
    };
    return project_initial_condition(grid, fn).values;
  }
  return std::nullopt;
}

std::vector<double> reference_cell_averages(const RunConfig& cfg, int factor) {
  const Grid grid = grid_for(cfg);
  const Problem problem = make_problem(cfg.problem);
  const InitialCondition ic = make_ic(cfg.ic);
  CwenoParams params;
  params.linear = cfg.linear_weights;
  return fine_grid_reference(grid, problem, ic.value, cfg.t_final, factor,
                             params)
      .values;
}

}  // namespace quinpi

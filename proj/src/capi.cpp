#include "quinpi.h"

#include <cmath>
#include <cstring>
#include <new>
#include <string>

#include "driver/driver.hpp"

using quinpi::RunConfig;

struct qp_simulation {
  quinpi::Simulation sim;
  std::string error;
  explicit qp_simulation(const RunConfig& cfg) : sim(cfg) {}
};

namespace {

qp_status to_cpp_config(const qp_config* cfg, RunConfig* out) {
  if (!cfg) return QP_ERR_INVALID_ARGUMENT;
  if (cfg->problem < 0 || cfg->problem > 2) return QP_ERR_INVALID_ARGUMENT;
  if (cfg->ic < 0 || cfg->ic > 4) return QP_ERR_INVALID_ARGUMENT;
  if (cfg->scheme < 0 || cfg->scheme > 3) return QP_ERR_INVALID_ARGUMENT;
  if (cfg->n_cells < 5) return QP_ERR_INVALID_ARGUMENT;
  if (cfg->t_final <= 0.0) return QP_ERR_INVALID_ARGUMENT;
  if (cfg->nu <= 0.0 && cfg->cfl <= 0.0) return QP_ERR_INVALID_ARGUMENT;
  if (cfg->eps_t_exponent != 2 && cfg->eps_t_exponent != 3)
    return QP_ERR_INVALID_ARGUMENT;

  out->problem = static_cast<quinpi::ProblemId>(cfg->problem);
  out->ic = static_cast<quinpi::IcId>(cfg->ic);
  out->scheme = static_cast<quinpi::SchemeId>(cfg->scheme);
  out->n_cells = cfg->n_cells;
  out->nu = cfg->nu;
  out->cfl = cfg->cfl;
  out->t_final = cfg->t_final;
  out->eps_t_exponent = cfg->eps_t_exponent;
  out->conservative_correction = cfg->conservative_correction != 0;
  out->explicit_predictor = cfg->explicit_predictor != 0;
  if (cfg->c0 != 0.0 || cfg->cl != 0.0 || cfg->cr != 0.0) {
    const double sum = cfg->c0 + cfg->cl + cfg->cr;
    if (!(cfg->c0 > 0.0 && cfg->cl > 0.0 && cfg->cr > 0.0) ||
        std::abs(sum - 1.0) > 1e-12)
      return QP_ERR_INVALID_ARGUMENT;
    out->linear_weights = {cfg->c0, cfg->cl, cfg->cr};
  }
  out->x_min = cfg->x_min;
  out->x_max = cfg->x_max;
  return QP_OK;
}

}  // namespace

extern "C" {

void qp_config_defaults(qp_config* cfg) {
  if (!cfg) return;
  std::memset(cfg, 0, sizeof(*cfg));
  cfg->problem = QP_PROBLEM_ADVECTION;
  cfg->ic = QP_IC_SINE_SMOOTH;
  cfg->scheme = QP_SCHEME_Q3P1;
  cfg->n_cells = 100;
  cfg->nu = 1.0;
  cfg->t_final = 1.0;
  cfg->eps_t_exponent = 2;
  cfg->conservative_correction = 1;
}

qp_status qp_sim_create(const qp_config* cfg, qp_simulation** out) {
  if (!out) return QP_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  RunConfig rc;
  const qp_status st = to_cpp_config(cfg, &rc);
  if (st != QP_OK) return st;
  try {
    *out = new qp_simulation(rc);
  } catch (const std::invalid_argument&) {
    return QP_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    return QP_ERR_INTERNAL;
  } catch (const std::exception&) {
    return QP_ERR_INTERNAL;
  }
  return QP_OK;
}

void qp_sim_destroy(qp_simulation* sim) { delete sim; }

qp_status qp_sim_advance(qp_simulation* sim) {
  if (!sim) return QP_ERR_INVALID_ARGUMENT;
  try {
    sim->sim.advance();
  } catch (const std::exception& e) {
    sim->error = e.what();
    return QP_ERR_SOLVER_FAILURE;
  }
  return QP_OK;
}

qp_status qp_sim_run(qp_simulation* sim) {
  if (!sim) return QP_ERR_INVALID_ARGUMENT;
  while (!sim->sim.done()) {
    const qp_status st = qp_sim_advance(sim);
    if (st != QP_OK) return st;
  }
  return QP_OK;
}

int qp_sim_done(const qp_simulation* sim) {
  return sim && sim->sim.done() ? 1 : 0;
}

int qp_sim_n_cells(const qp_simulation* sim) {
  return sim ? sim->sim.grid().n_cells : 0;
}

double qp_sim_time(const qp_simulation* sim) {
  return sim ? sim->sim.state().time : 0.0;
}

qp_status qp_sim_solution(const qp_simulation* sim, double* x, double* u) {
  if (!sim) return QP_ERR_INVALID_ARGUMENT;
  const auto& grid = sim->sim.grid();
  const auto& state = sim->sim.state();
  for (int j = 0; j < grid.n_cells; ++j) {
    if (x) x[j] = grid.center(j);
    if (u) u[j] = state[j];
  }
  return QP_OK;
}

int qp_sim_step_count(const qp_simulation* sim) {
  return sim ? static_cast<int>(sim->sim.steps().size()) : 0;
}

qp_status qp_sim_step_diag(const qp_simulation* sim, int step,
                           qp_step_diag* out) {
  if (!sim || !out) return QP_ERR_INVALID_ARGUMENT;
  const auto& steps = sim->sim.steps();
  if (step < 0 || step >= static_cast<int>(steps.size()))
    return QP_ERR_INVALID_ARGUMENT;
  const auto& r = steps[step];
  out->time = r.time;
  out->mass_deviation = r.mass_deviation;
  out->total_variation = r.total_variation;
  out->step_seconds = r.step_seconds;
  out->newton_iterations = r.newton_iterations;
  return QP_OK;
}

const char* qp_sim_error_message(const qp_simulation* sim) {
  return sim ? sim->error.c_str() : "";
}

qp_status qp_exact_cell_averages(const qp_config* cfg, double t, double* u) {
  if (!u) return QP_ERR_INVALID_ARGUMENT;
  RunConfig rc;
  const qp_status st = to_cpp_config(cfg, &rc);
  if (st != QP_OK) return st;
  try {
    const auto exact = quinpi::exact_cell_averages(rc, t);
    if (!exact) return QP_ERR_NO_EXACT_SOLUTION;
    for (size_t j = 0; j < exact->size(); ++j) u[j] = (*exact)[j];
  } catch (const std::exception&) {
    return QP_ERR_INTERNAL;
  }
  return QP_OK;
}

qp_status qp_reference_cell_averages(const qp_config* cfg, int refine_factor,
                                     double* u) {
  if (!u || refine_factor < 8) return QP_ERR_INVALID_ARGUMENT;
  RunConfig rc;
  const qp_status st = to_cpp_config(cfg, &rc);
  if (st != QP_OK) return st;
  try {
    const auto ref = quinpi::reference_cell_averages(rc, refine_factor);
    for (size_t j = 0; j < ref.size(); ++j) u[j] = ref[j];
  } catch (const std::invalid_argument&) {
    return QP_ERR_CFL_VIOLATION;
  } catch (const std::exception&) {
    return QP_ERR_INTERNAL;
  }
  return QP_OK;
}

const char* qp_status_string(qp_status s) {
  switch (s) {
    case QP_OK: return "ok";
    case QP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case QP_ERR_SOLVER_FAILURE: return "nonlinear solver failure";
    case QP_ERR_NO_EXACT_SOLUTION: return "no exact solution for this setup";
    case QP_ERR_CFL_VIOLATION: return "CFL violation";
    case QP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

}  // extern "C"

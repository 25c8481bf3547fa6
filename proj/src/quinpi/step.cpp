#include "quinpi/step.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace quinpi {

namespace {

std::vector<double> flux_difference(const std::vector<double>& f) {
  const int n = static_cast<int>(f.size());
  std::vector<double> d(n);
  for (int j = 0; j < n; ++j) d[j] = f[j] - f[(j + n - 1) % n];
  return d;
}

[[noreturn]] void newton_abort(const char* where, int stage,
                               const NewtonReport& report) {
  std::ostringstream os;
  os << where << ": Newton failed at stage " << stage + 1 << " after "
     << report.iterations << " iterations, residual "
     << report.final_residual_norm;
  throw std::runtime_error(os.str());
}

}  // namespace

StageBundle predictor_step(const Grid& grid, const StateVector& u_n, double dt,
                           const Problem& problem, double alpha,
                           const QuinpiConfig& config) {
  if (!(dt > 0.0)) throw std::invalid_argument("predictor_step: dt must be > 0");
  const ButcherTableau tab = composite_euler_tableau(dirk3_tableau());
  const int s = tab.stages;
  const double tol = dt * dt * dt;

  StageOperator op{&problem, alpha, grid.h, nullptr};

  StageBundle bundle;
  bundle.stage_states.reserve(s);
  bundle.stage_fluxes.reserve(s);

  StateVector prev = u_n;
  for (int k = 0; k < s; ++k) {
    const double theta = tab.a[k][k];
    StateVector stage = prev;
    stage.time = u_n.time + tab.c[k] * dt;
    if (config.explicit_predictor) {
      // Forward Euler substep; the stage flux is taken at the start state.
      const std::vector<double> f = op.interface_fluxes(prev);
      const std::vector<double> df = flux_difference(f);
      for (int j = 0; j < stage.size(); ++j)
        stage[j] = prev[j] - theta * dt / grid.h * df[j];
      bundle.stage_fluxes.push_back(f);
      bundle.newton_reports.push_back({});
    } else {
      const std::vector<double>& known = prev.values;
      auto residual = [&](const StateVector& u) {
        return stage_residual(u, known, theta, dt, op);
      };
      auto jacobian = [&](const StateVector& u) {
        return assemble_jacobian(u, theta, dt, op);
      };
      const NewtonReport report = newton_solve(residual, jacobian, stage, tol,
                                               config.max_newton_iter);
      if (!report.converged) newton_abort("predictor_step", k, report);
      bundle.newton_reports.push_back(report);
      bundle.stage_fluxes.push_back(op.interface_fluxes(stage));
    }
    bundle.stage_states.push_back(stage);
    prev = stage;
  }

  const int n = u_n.size();
  bundle.end_flux.assign(n, 0.0);
  for (int k = 0; k < s; ++k)
    for (int j = 0; j < n; ++j)
      bundle.end_flux[j] += tab.b[k] * bundle.stage_fluxes[k][j];
  bundle.end_state = StateVector(n, u_n.time + dt);
  const std::vector<double> dend = flux_difference(bundle.end_flux);
  for (int j = 0; j < n; ++j)
    bundle.end_state[j] = u_n[j] - dt / grid.h * dend[j];
  return bundle;
}

StageBundle corrector_step(const Grid& grid, const StateVector& u_n,
                           const StageBundle& predictor, double dt,
                           const Problem& problem, double alpha,
                           const QuinpiConfig& config) {
  if (static_cast<int>(predictor.stage_states.size()) != 3)
    throw std::invalid_argument("corrector_step: need 3 predictor stages");
  const ButcherTableau tab = dirk3_tableau();
  const int s = tab.stages;
  const int n = u_n.size();
  const double tol = dt * dt * dt;

  StageBundle bundle;
  bundle.stage_states.reserve(s);
  bundle.stage_fluxes.reserve(s);
  bundle.stage_weight_sets.reserve(s);

  for (int k = 0; k < s; ++k) {
    // The sorted predictor abscissae coincide with the DIRK3 abscissae, so
    // stage k freezes its weights from predictor stage k.
    bundle.stage_weight_sets.push_back(weight_sets_from_state(
        predictor.stage_states[k], grid.h, config.cweno));
    StageOperator op{&problem, alpha, grid.h, &bundle.stage_weight_sets[k]};

    std::vector<double> known = u_n.values;
    for (int l = 0; l < k; ++l) {
      const std::vector<double> df = flux_difference(bundle.stage_fluxes[l]);
      for (int j = 0; j < n; ++j) known[j] -= dt / grid.h * tab.a[k][l] * df[j];
    }

    StateVector stage = predictor.stage_states[k];
    stage.time = u_n.time + tab.c[k] * dt;
    auto residual = [&](const StateVector& u) {
      return stage_residual(u, known, tab.a[k][k], dt, op);
    };
    auto jacobian = [&](const StateVector& u) {
      return assemble_jacobian(u, tab.a[k][k], dt, op);
    };
    const NewtonReport report = newton_solve(residual, jacobian, stage, tol,
                                             config.max_newton_iter);
    if (!report.converged) newton_abort("corrector_step", k, report);
    bundle.newton_reports.push_back(report);
    bundle.stage_fluxes.push_back(op.interface_fluxes(stage));
    bundle.stage_states.push_back(stage);
  }

  bundle.end_flux.assign(n, 0.0);
  for (int k = 0; k < s; ++k)
    for (int j = 0; j < n; ++j)
      bundle.end_flux[j] += tab.b[k] * bundle.stage_fluxes[k][j];
  bundle.end_state = StateVector(n, u_n.time + dt);
  const std::vector<double> dend = flux_difference(bundle.end_flux);
  for (int j = 0; j < n; ++j)
    bundle.end_state[j] = u_n[j] - dt / grid.h * dend[j];
  return bundle;
}

CeCubic ce_cubic(double u_n_j, const std::array<double, 3>& stage_derivatives,
                 const std::array<double, 3>& c, double dt) {
  // In s = (t - t^n)/dt: P'(c_k) = dt K_k, a 3x3 system for (p1, p2, p3).
  double m[3][3];
  double rhs[3];
  for (int k = 0; k < 3; ++k) {
    m[k][0] = 1.0;
    m[k][1] = 2.0 * c[k];
    m[k][2] = 3.0 * c[k] * c[k];
    rhs[k] = dt * stage_derivatives[k];
  }
  // Gaussian elimination with partial pivoting on the tiny system.
  for (int col = 0; col < 3; ++col) {
    int p = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[p][col])) p = r;
    if (std::fabs(m[p][col]) < 1e-300)
      throw std::invalid_argument("ce_cubic: coincident abscissae");
    if (p != col) {
      for (int cc = 0; cc < 3; ++cc) std::swap(m[col][cc], m[p][cc]);
      std::swap(rhs[col], rhs[p]);
    }
    for (int r = col + 1; r < 3; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int cc = col; cc < 3; ++cc) m[r][cc] -= f * m[col][cc];
      rhs[r] -= f * rhs[col];
    }
  }
  double sol[3];
  for (int r = 2; r >= 0; --r) {
    double acc = rhs[r];
    for (int cc = r + 1; cc < 3; ++cc) acc -= m[r][cc] * sol[cc];
    sol[r] = acc / m[r][r];
  }
  return {u_n_j, sol[0], sol[1], sol[2]};
}

double time_smoothness_indicator(const CeCubic& ce) {
  // Closed-form integrals of (P^(l))^2 over s in [0,1]; the dt^{2l-1}
  // prefactors cancel against the substitution exactly.
  const double a = ce.p1, b = 2.0 * ce.p2, c = 3.0 * ce.p3;
  const double first =
      a * a + a * b + (b * b + 2.0 * a * c) / 3.0 + 0.5 * b * c + c * c / 5.0;
  const double second =
      4.0 * ce.p2 * ce.p2 + 12.0 * ce.p2 * ce.p3 + 12.0 * ce.p3 * ce.p3;
  const double third = 36.0 * ce.p3 * ce.p3;
  return first + second + third;
}

void space_time_indicators(const StateVector& u_n, const StateVector& stage1,
                           const StateVector& stage2, const StateVector& u_np1,
                           std::vector<double>& i_x_minus,
                           std::vector<double>& i_x_plus) {
  const int n = u_n.size();
  if (stage1.size() != n || stage2.size() != n || u_np1.size() != n)
    throw std::invalid_argument("space_time_indicators: size mismatch");
  i_x_minus.assign(n, 0.0);
  i_x_plus.assign(n, 0.0);
  const StateVector* levels[4] = {&u_n, &stage1, &stage2, &u_np1};
  for (const StateVector* lv : levels) {
    for (int j = 0; j < n; ++j) {
      const double dp = (*lv)[(j + 1) % n] - (*lv)[j];
      const double dm = (*lv)[(j + n - 1) % n] - (*lv)[j];
      i_x_plus[j] += dp * dp;
      i_x_minus[j] += dm * dm;
    }
  }
}

BlendWeights blend_weights(const std::vector<double>& i3, double dt,
                           double eps_t, double tau) {
  if (!(dt > 0.0) || !(eps_t > 0.0))
    throw std::invalid_argument("blend_weights: dt and eps_t must be > 0");
  BlendWeights w;
  // C_L = dt^2, capped away from 1 so the pair stays a convex split for the
  // very large time steps of the coarsest runs.
  w.cl = std::min(dt * dt, 0.5);
  w.ch = 1.0 - w.cl;
  w.eps_t = eps_t;
  w.i3 = i3;
  const int n = static_cast<int>(i3.size());
  w.wh.resize(n);
  w.wl.resize(n);
  const double wl_tilde = w.cl / std::pow(eps_t, tau);
  for (int j = 0; j < n; ++j) {
    const double wh_tilde = w.ch / std::pow(eps_t + i3[j], tau);
    w.wh[j] = wh_tilde / (wh_tilde + wl_tilde);
    w.wl[j] = wl_tilde / (wh_tilde + wl_tilde);
  }
  return w;
}

StateVector blend(const StateVector& u_d3p1, const StateVector& u_ie,
                  const BlendWeights& w) {
  const int n = u_d3p1.size();
  if (u_ie.size() != n || static_cast<int>(w.wh.size()) != n)
    throw std::invalid_argument("blend: size mismatch");
  StateVector u_b(n, u_d3p1.time);
  for (int j = 0; j < n; ++j)
    u_b[j] = w.wh[j] / w.ch * (u_d3p1[j] - w.cl * u_ie[j]) + w.wl[j] * u_ie[j];
  return u_b;
}

std::vector<double> mass_defect(const BlendWeights& w,
                                const std::vector<double>& flux_d3p1,
                                const std::vector<double>& flux_ie, double dt,
                                double h) {
  const int n = static_cast<int>(w.wh.size());
  if (static_cast<int>(flux_d3p1.size()) != n ||
      static_cast<int>(flux_ie.size()) != n)
    throw std::invalid_argument("mass_defect: size mismatch");
  std::vector<double> mu(n);
  for (int j = 0; j < n; ++j) {
    const int jp = (j + 1) % n;
    const double dwh = w.wh[j] - w.wh[jp];
    const double dwl = w.wl[j] - w.wl[jp];
    mu[j] = dt / (w.ch * h) *
            (dwh * flux_d3p1[j] + (w.ch * dwl - w.cl * dwh) * flux_ie[j]);
  }
  return mu;
}

StateVector redistribute(const StateVector& u_b, const std::vector<double>& mu,
                         const std::vector<double>& wh) {
  const int n = u_b.size();
  if (static_cast<int>(mu.size()) != n || static_cast<int>(wh.size()) != n)
    throw std::invalid_argument("redistribute: size mismatch");
  StateVector u(u_b);
  for (int j = 0; j < n; ++j) {
    const int jp = (j + 1) % n;
    const int jm = (j + n - 1) % n;
    u[j] += wh[j] / (wh[j] + wh[jp]) * mu[j] +
            wh[j] / (wh[j] + wh[jm]) * mu[jm];
  }
  return u;
}

StepResult quinpi_step(const Grid& grid, const StateVector& u_n, double dt,
                       const Problem& problem, const QuinpiConfig& config) {
  if (!(dt > 0.0)) throw std::invalid_argument("quinpi_step: dt must be > 0");
  const double alpha = max_wave_speed(problem, u_n);
  const int n = u_n.size();

  StepResult out;
  const StageBundle pred = predictor_step(grid, u_n, dt, problem, alpha, config);
  const StageBundle corr =
      corrector_step(grid, u_n, pred, dt, problem, alpha, config);
  out.u_ie = pred.end_state;
  out.u_d3p1 = corr.end_state;

  out.diag.newton_reports = pred.newton_reports;
  out.diag.newton_reports.insert(out.diag.newton_reports.end(),
                                 corr.newton_reports.begin(),
                                 corr.newton_reports.end());
  for (const NewtonReport& r : out.diag.newton_reports)
    out.diag.newton_total += r.iterations;

  const ButcherTableau tab = dirk3_tableau();
  const std::array<double, 3> c = {tab.c[0], tab.c[1], tab.c[2]};
  std::array<std::vector<double>, 3> df;
  for (int k = 0; k < 3; ++k) df[k] = flux_difference(corr.stage_fluxes[k]);

  std::vector<double> i_t(n);
  for (int j = 0; j < n; ++j) {
    const std::array<double, 3> kk = {-df[0][j] / grid.h, -df[1][j] / grid.h,
                                      -df[2][j] / grid.h};
    i_t[j] = time_smoothness_indicator(ce_cubic(u_n[j], kk, c, dt));
  }
  std::vector<double> i_xm, i_xp;
  space_time_indicators(u_n, corr.stage_states[0], corr.stage_states[1],
                        corr.end_state, i_xm, i_xp);
  std::vector<double> i3(n);
  for (int j = 0; j < n; ++j) i3[j] = i_t[j] + i_xm[j] + i_xp[j];

  const double eps_t = std::pow(dt, config.eps_t_exponent);
  out.diag.blend = blend_weights(i3, dt, eps_t, config.blend_tau);
  out.diag.blend.i_t = std::move(i_t);
  out.diag.blend.i_x_minus = std::move(i_xm);
  out.diag.blend.i_x_plus = std::move(i_xp);

  const StateVector u_b = blend(out.u_d3p1, out.u_ie, out.diag.blend);
  if (config.conservative_correction) {
    out.diag.mass_defects =
        mass_defect(out.diag.blend, corr.end_flux, pred.end_flux, dt, grid.h);
    out.u_q3p1 = redistribute(u_b, out.diag.mass_defects, out.diag.blend.wh);
  } else {
    out.u_q3p1 = u_b;
  }
  out.u_q3p1.time = u_n.time + dt;
  return out;
}

StateVector q3p1_step(const Grid& grid, const StateVector& u_n, double dt,
                      const Problem& problem, const QuinpiConfig& config,
                      StepDiagnostics* diag) {
  StepResult r = quinpi_step(grid, u_n, dt, problem, config);
  if (diag) *diag = std::move(r.diag);
  return std::move(r.u_q3p1);
}

}  // namespace quinpi

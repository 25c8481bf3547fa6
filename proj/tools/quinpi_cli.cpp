// Experiment driver for the quinpi shared library.  Talks to the solver
// exclusively through the C API and emits CSV artifacts.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quinpi.h"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitSolverError = 3;

struct CliOptions {
  std::string problem = "advection";
  std::string ic = "sine-smooth";
  std::string scheme = "Q3P1";
  int n = 100;
  double nu = 1.0;
  double cfl = 0.0;
  double tfinal = 1.0;
  int eps_t_exp = 2;
  bool no_conservative_correction = false;
  bool explicit_predictor = false;
  std::vector<double> linear_weights;  // c0 cl cr
  std::string out_dir = ".";
};

const std::map<std::string, int> kProblems = {
    {"advection", QP_PROBLEM_ADVECTION},
    {"burgers", QP_PROBLEM_BURGERS},
    {"buckley", QP_PROBLEM_BUCKLEY_LEVERETT}};
const std::map<std::string, int> kIcs = {{"sine-smooth", QP_IC_SINE_SMOOTH},
                                         {"sine-jump", QP_IC_SINE_JUMP},
                                         {"double-step", QP_IC_DOUBLE_STEP},
                                         {"two-shock", QP_IC_TWO_SHOCK},
                                         {"half-step", QP_IC_HALF_STEP}};
const std::map<std::string, int> kSchemes = {{"IE", QP_SCHEME_IE},
                                             {"D3P1", QP_SCHEME_D3P1},
                                             {"Q3P1", QP_SCHEME_Q3P1},
                                             {"SSPRK3", QP_SCHEME_SSPRK3}};

qp_config to_config(const CliOptions& opt) {
  qp_config cfg;
  qp_config_defaults(&cfg);
  cfg.problem = kProblems.at(opt.problem);
  cfg.ic = kIcs.at(opt.ic);
  cfg.scheme = kSchemes.at(opt.scheme);
  cfg.n_cells = opt.n;
  cfg.nu = opt.nu;
  cfg.cfl = opt.cfl;
  cfg.t_final = opt.tfinal;
  cfg.eps_t_exponent = opt.eps_t_exp;
  cfg.conservative_correction = opt.no_conservative_correction ? 0 : 1;
  cfg.explicit_predictor = opt.explicit_predictor ? 1 : 0;
  if (opt.linear_weights.size() == 3) {
    cfg.c0 = opt.linear_weights[0];
    cfg.cl = opt.linear_weights[1];
    cfg.cr = opt.linear_weights[2];
  }
  return cfg;
}

void add_common_flags(CLI::App* cmd, CliOptions* opt) {
  cmd->add_option("--problem", opt->problem)
      ->check(CLI::IsMember({"advection", "burgers", "buckley"}));
  cmd->add_option("--ic", opt->ic)
      ->check(CLI::IsMember(
          {"sine-smooth", "sine-jump", "double-step", "two-shock", "half-step"}));
  cmd->add_option("--scheme", opt->scheme)
      ->check(CLI::IsMember({"IE", "D3P1", "Q3P1", "SSPRK3"}));
  cmd->add_option("--n", opt->n, "number of cells");
  cmd->add_option("--nu", opt->nu, "mesh ratio dt/h");
  cmd->add_option("--cfl", opt->cfl, "dt = cfl*h/alpha instead of nu*h");
  cmd->add_option("--tfinal", opt->tfinal);
  cmd->add_option("--eps-t-exp", opt->eps_t_exp)->check(CLI::IsMember({2, 3}));
  cmd->add_flag("--no-conservative-correction",
                opt->no_conservative_correction);
  cmd->add_flag("--explicit-predictor", opt->explicit_predictor);
  cmd->add_option("--linear-weights", opt->linear_weights,
                  "CWENO linear weights c0 cl cr")
      ->expected(3);
  cmd->add_option("--out", opt->out_dir, "output directory");
  cmd->set_config("--config");
}

FILE* open_csv(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  const std::string path = dir + "/" + name;
  FILE* f = std::fopen(path.c_str(), "w");
  if (!f) {
    std::fprintf(stderr, "cannot open %s\n", path.c_str());
    std::exit(kExitConfigError);
  }
  return f;
}

int check(qp_status st, qp_simulation* sim = nullptr) {
  if (st == QP_OK) return 0;
  std::fprintf(stderr, "error: %s", qp_status_string(st));
  if (sim && qp_sim_error_message(sim)[0])
    std::fprintf(stderr, " (%s)", qp_sim_error_message(sim));
  std::fprintf(stderr, "\n");
  return st == QP_ERR_INVALID_ARGUMENT ? kExitConfigError : kExitSolverError;
}

struct RunOutput {
  std::vector<double> x, u;
  std::vector<qp_step_diag> diags;
};

int run_once(const qp_config& cfg, RunOutput* out) {
  qp_simulation* sim = nullptr;
  int rc = check(qp_sim_create(&cfg, &sim));
  if (rc) return rc;
  rc = check(qp_sim_run(sim), sim);
  if (rc) {
    qp_sim_destroy(sim);
    return rc;
  }
  const int n = qp_sim_n_cells(sim);
  out->x.resize(n);
  out->u.resize(n);
  qp_sim_solution(sim, out->x.data(), out->u.data());
  const int steps = qp_sim_step_count(sim);
  out->diags.resize(steps);
  for (int s = 0; s < steps; ++s) qp_sim_step_diag(sim, s, &out->diags[s]);
  qp_sim_destroy(sim);
  return 0;
}

int cmd_run(const CliOptions& opt) {
  const qp_config cfg = to_config(opt);
  RunOutput out;
  const int rc = run_once(cfg, &out);
  if (rc) return rc;

  FILE* sol = open_csv(opt.out_dir, "solution.csv");
  std::fprintf(sol, "x,u\n");
  for (size_t j = 0; j < out.x.size(); ++j)
    std::fprintf(sol, "%.17g,%.17g\n", out.x[j], out.u[j]);
  std::fclose(sol);

  FILE* diag = open_csv(opt.out_dir, "diag.csv");
  std::fprintf(diag, "t,mass_dev,tv,newton_total,step_seconds\n");
  for (const qp_step_diag& d : out.diags)
    std::fprintf(diag, "%.17g,%.17g,%.17g,%d,%.17g\n", d.time,
                 d.mass_deviation, d.total_variation, d.newton_iterations,
                 d.step_seconds);
  std::fclose(diag);

  std::printf("wrote %s/solution.csv and diag.csv (%zu steps)\n",
              opt.out_dir.c_str(), out.diags.size());
  return 0;
}

int cmd_converge(const CliOptions& opt, const std::vector<int>& n_list) {
  FILE* table = open_csv(opt.out_dir, "table.csv");
  std::fprintf(table, "N,L1,L1_rate,Linf,Linf_rate\n");
  double prev_l1 = 0.0, prev_linf = 0.0;
  bool first = true;
  for (int n : n_list) {
    CliOptions o = opt;
    o.n = n;
    const qp_config cfg = to_config(o);
    RunOutput out;
    int rc = run_once(cfg, &out);
    if (rc) {
      std::fclose(table);
      return rc;
    }
    std::vector<double> exact(n);
    rc = check(qp_exact_cell_averages(&cfg, opt.tfinal, exact.data()));
    if (rc) {
      std::fclose(table);
      return rc;
    }
    const double h = (out.x[1] - out.x[0]);
    double l1 = 0.0, linf = 0.0;
    for (int j = 0; j < n; ++j) {
      const double e = std::fabs(out.u[j] - exact[j]);
      l1 += h * e;
      linf = std::max(linf, e);
    }
    if (first) {
      std::fprintf(table, "%d,%.17g,,%.17g,\n", n, l1, linf);
      std::printf("N=%5d  L1=%.3e          Linf=%.3e\n", n, l1, linf);
    } else {
      const double r1 = std::log2(prev_l1 / l1);
      const double ri = std::log2(prev_linf / linf);
      std::fprintf(table, "%d,%.17g,%.17g,%.17g,%.17g\n", n, l1, r1, linf, ri);
      std::printf("N=%5d  L1=%.3e (%.2f)  Linf=%.3e (%.2f)\n", n, l1, r1,
                  linf, ri);
    }
    prev_l1 = l1;
    prev_linf = linf;
    first = false;
  }
  std::fclose(table);
  return 0;
}

double median_step_seconds(const std::vector<qp_step_diag>& diags) {
  std::vector<double> t;
  for (const auto& d : diags) t.push_back(d.step_seconds);
  if (t.empty()) return 0.0;
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

int cmd_timing(const CliOptions& opt, const std::vector<int>& n_list) {
  FILE* table = open_csv(opt.out_dir, "table.csv");
  std::fprintf(table, "N,explicit_step_seconds,implicit_step_seconds,ratio\n");
  for (int n : n_list) {
    CliOptions oe = opt, oi = opt;
    oe.n = n;
    oe.scheme = "SSPRK3";
    oi.n = n;
    oi.scheme = "Q3P1";
    RunOutput re, ri;
    int rc = run_once(to_config(oe), &re);
    if (!rc) rc = run_once(to_config(oi), &ri);
    if (rc) {
      std::fclose(table);
      return rc;
    }
    const double te = median_step_seconds(re.diags);
    const double ti = median_step_seconds(ri.diags);
    const double ratio = te > 0.0 ? ti / te : 0.0;
    std::fprintf(table, "%d,%.17g,%.17g,%.17g\n", n, te, ti, ratio);
    std::printf("N=%5d  explicit=%.3e s  implicit=%.3e s  ratio=%.2f\n", n,
                te, ti, ratio);
  }
  std::fclose(table);
  return 0;
}

int cmd_newton_log(const CliOptions& opt) {
  if (opt.scheme == "SSPRK3") {
    std::fprintf(stderr, "newton-log requires an implicit scheme\n");
    return kExitConfigError;
  }
  const qp_config cfg = to_config(opt);
  RunOutput out;
  const int rc = run_once(cfg, &out);
  if (rc) return rc;
  FILE* f = open_csv(opt.out_dir, "newton.csv");
  std::fprintf(f, "step,newton_total\n");
  for (size_t s = 0; s < out.diags.size(); ++s)
    std::fprintf(f, "%zu,%d\n", s, out.diags[s].newton_iterations);
  std::fclose(f);
  std::printf("wrote %s/newton.csv (%zu steps)\n", opt.out_dir.c_str(),
              out.diags.size());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Implicit third-order finite volume solver for 1D scalar "
               "conservation laws"};
  app.require_subcommand(1);

  CliOptions opt;
  std::vector<int> n_list = {64, 128, 256, 512, 1024};
  std::vector<int> timing_n_list = {200, 400, 800, 1600};

  CLI::App* run = app.add_subcommand("run", "single run; solution + diag CSV");
  add_common_flags(run, &opt);

  CLI::App* conv =
      app.add_subcommand("converge", "dyadic refinement error table");
  add_common_flags(conv, &opt);
  conv->add_option("--n-list", n_list, "cell counts (dyadic)");

  CLI::App* timing =
      app.add_subcommand("timing", "implicit/explicit per-step cost table");
  add_common_flags(timing, &opt);
  timing->add_option("--n-list", timing_n_list, "cell counts");

  CLI::App* nlog =
      app.add_subcommand("newton-log", "Newton iterations per time step");
  add_common_flags(nlog, &opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfigError;
  }

  if (run->parsed()) return cmd_run(opt);
  if (conv->parsed()) return cmd_converge(opt, n_list);
  if (timing->parsed()) return cmd_timing(opt, timing_n_list);
  if (nlog->parsed()) return cmd_newton_log(opt);
  return kExitConfigError;
}

/* C interface to the quinpi solver library.
 *
 * All entry points return a qp_status; handles are opaque.  A simulation is
 * configured once, stepped (or run to completion), and then queried for the
 * final cell averages and the per-step diagnostics.
 */
#ifndef QUINPI_H
#define QUINPI_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QUINPI_API __declspec(dllexport)
#else
#define QUINPI_API __attribute__((visibility("default")))
#endif

typedef enum qp_status {
  QP_OK = 0,
  QP_ERR_INVALID_ARGUMENT = 1,
  QP_ERR_SOLVER_FAILURE = 2,
  QP_ERR_NO_EXACT_SOLUTION = 3,
  QP_ERR_CFL_VIOLATION = 4,
  QP_ERR_INTERNAL = 5
} qp_status;

typedef enum qp_problem_id {
  QP_PROBLEM_ADVECTION = 0,
  QP_PROBLEM_BURGERS = 1,
  QP_PROBLEM_BUCKLEY_LEVERETT = 2
} qp_problem_id;

typedef enum qp_ic_id {
  QP_IC_SINE_SMOOTH = 0, /* 0.5 - 0.25 sin(pi x) */
  QP_IC_SINE_JUMP = 1,   /* sin(pi x) + 3 on [-0.4, 0.4] */
  QP_IC_DOUBLE_STEP = 2, /* 1 on [-0.25, 0.25], 0 elsewhere */
  QP_IC_TWO_SHOCK = 3,   /* 0.2 - sin(pi x) + sin(2 pi x) */
  QP_IC_HALF_STEP = 4    /* 0.5 on [-0.25, 0.25] mod 1, 0 elsewhere */
} qp_ic_id;

typedef enum qp_scheme_id {
  QP_SCHEME_IE = 0,     /* composite implicit Euler predictor */
  QP_SCHEME_D3P1 = 1,   /* frozen-weight DIRK3 corrector */
  QP_SCHEME_Q3P1 = 2,   /* blended + conservative correction */
  QP_SCHEME_SSPRK3 = 3  /* explicit reference scheme */
} qp_scheme_id;

typedef struct qp_config {
  int problem;       /* qp_problem_id */
  int ic;            /* qp_ic_id */
  int scheme;        /* qp_scheme_id */
  int n_cells;
  double nu;         /* mesh ratio dt/h for the implicit schemes */
  double cfl;        /* if > 0, dt = cfl*h/alpha instead of nu*h */
  double t_final;
  int eps_t_exponent;            /* 2 or 3: eps_t = dt^exponent */
  int conservative_correction;   /* 0 disables the mass redistribution */
  int explicit_predictor;        /* 1 uses forward-Euler substeps */
  double c0, cl, cr;             /* CWENO linear weights, 0 -> defaults */
  double x_min, x_max;           /* equal -> per-problem default domain */
} qp_config;

typedef struct qp_step_diag {
  double time;            /* time reached after the step */
  double mass_deviation;  /* total mass minus initial total mass */
  double total_variation;
  double step_seconds;
  int newton_iterations;  /* summed over the nonlinear solves of the step */
} qp_step_diag;

typedef struct qp_simulation qp_simulation;

QUINPI_API void qp_config_defaults(qp_config* cfg);

QUINPI_API qp_status qp_sim_create(const qp_config* cfg, qp_simulation** out);
QUINPI_API void qp_sim_destroy(qp_simulation* sim);

/* Advances one time step (clipped to end exactly at t_final). */
QUINPI_API qp_status qp_sim_advance(qp_simulation* sim);
QUINPI_API qp_status qp_sim_run(qp_simulation* sim);
QUINPI_API int qp_sim_done(const qp_simulation* sim);

QUINPI_API int qp_sim_n_cells(const qp_simulation* sim);
QUINPI_API double qp_sim_time(const qp_simulation* sim);
/* x and u must have room for n_cells entries; either may be NULL. */
QUINPI_API qp_status qp_sim_solution(const qp_simulation* sim, double* x,
                                     double* u);
QUINPI_API int qp_sim_step_count(const qp_simulation* sim);
QUINPI_API qp_status qp_sim_step_diag(const qp_simulation* sim, int step,
                                      qp_step_diag* out);
QUINPI_API const char* qp_sim_error_message(const qp_simulation* sim);

/* Cell averages of the exact solution at time t on the config's grid.
 * Available for linear advection (any IC) and pre-shock Burgers. */
QUINPI_API qp_status qp_exact_cell_averages(const qp_config* cfg, double t,
                                            double* u);

/* Fine-grid explicit reference at cfg->t_final, block-averaged onto the
 * config's grid.  refine_factor must be >= 8. */
QUINPI_API qp_status qp_reference_cell_averages(const qp_config* cfg,
                                                int refine_factor, double* u);

QUINPI_API const char* qp_status_string(qp_status s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QUINPI_H */

#ifndef QUINPI_IRK_NEWTON_HPP
#define QUINPI_IRK_NEWTON_HPP

#include <functional>
#include <vector>

#include "core/fv.hpp"
#include "core/problem.hpp"
#include "core/state.hpp"
#include "cweno/cweno.hpp"
#include "la/cyclic_banded.hpp"

namespace quinpi {

// One DIRK stage's spatial operator: interface fluxes of a state through a
// fixed (frozen) reconstruction and the Lax-Friedrichs flux.  With null
// weights the reconstruction is piecewise constant and the stencil is one
// cell narrower.
struct StageOperator {
  const Problem* problem = nullptr;
  double alpha = 0.0;
  double h = 0.0;
  const std::vector<CellWeightSet>* weights = nullptr;

  int bandwidth() const { return weights ? 2 : 1; }
  BedPair bed(const StateVector& u) const;
  // Entry j is F_{j+1/2}.
  std::vector<double> interface_fluxes(const StateVector& u) const;
};

// G_j = u_j - known_j + (a_kk dt / h) (F_{j+1/2}(u) - F_{j-1/2}(u)).
std::vector<double> stage_residual(const StateVector& u_guess,
                                   const std::vector<double>& u_known,
                                   double a_kk, double dt,
                                   const StageOperator& op);

// Exact derivative of stage_residual at u_point (weights and alpha frozen).
CyclicBandedMatrix assemble_jacobian(const StateVector& u_point, double a_kk,
                                     double dt, const StageOperator& op);

struct NewtonReport {
  int iterations = 0;
  double final_residual_norm = 0.0;
  bool converged = false;
};

using ResidualFn = std::function<std::vector<double>(const StateVector&)>;
using JacobianFn = std::function<CyclicBandedMatrix(const StateVector&)>;

// Stops once the residual inf-norm or the relative update drops below tol;
// a guess that already satisfies the residual reports zero iterations.
NewtonReport newton_solve(const ResidualFn& residual,
                          const JacobianFn& jacobian, StateVector& iterate,
                          double tol, int max_iter = 50);

}  // namespace quinpi

#endif

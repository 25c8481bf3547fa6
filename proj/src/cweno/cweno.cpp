#include "cweno/cweno.hpp"

#include <cmath>
#include <stdexcept>

namespace quinpi {

namespace {

// Edge values of the three candidate polynomials as coefficients on
// (u_{j-1}, u_j, u_{j+1}).  "r" is the right edge x_j + h/2, "l" the left.
constexpr std::array<double, 3> kP2r = {-1.0 / 6.0, 5.0 / 6.0, 2.0 / 6.0};
constexpr std::array<double, 3> kP2l = {2.0 / 6.0, 5.0 / 6.0, -1.0 / 6.0};
constexpr std::array<double, 3> kPLr = {-0.5, 1.5, 0.0};
constexpr std::array<double, 3> kPLl = {0.5, 0.5, 0.0};
constexpr std::array<double, 3> kPRr = {0.0, 0.5, 0.5};
constexpr std::array<double, 3> kPRl = {0.0, 1.5, -0.5};

std::array<double, 3> p0_edge(const std::array<double, 3>& p2,
                              const std::array<double, 3>& pl,
                              const std::array<double, 3>& pr,
                              const LinearWeights& lw) {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i)
    out[i] = (p2[i] - lw.cl * pl[i] - lw.cr * pr[i]) / lw.c0;
  return out;
}

}  // namespace

PolyCoeffs optimal_poly(double u_m, double u_c, double u_p, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("optimal_poly: h must be > 0");
  PolyCoeffs p;
  p.a = (-u_p + 26.0 * u_c - u_m) / 24.0;
  p.b = (u_p - u_m) / (2.0 * h);
  p.c = (u_p - 2.0 * u_c + u_m) / (2.0 * h * h);
  return p;
}

Indicators smoothness_indicators(double u_m, double u_c, double u_p) {
  // Scaled variable: b*h and c*h^2 are h-free combinations of the data.
  const double bh = 0.5 * (u_p - u_m);
  const double ch2 = 0.5 * (u_p - 2.0 * u_c + u_m);
  Indicators ind;
  ind.left = (u_c - u_m) * (u_c - u_m);
  ind.right = (u_p - u_c) * (u_p - u_c);
  ind.center = bh * bh + (52.0 / 3.0) * ch2 * ch2;
  return ind;
}

NonlinearWeights nonlinear_weights(const Indicators& ind,
                                   const LinearWeights& linear, double eps,
                                   double tau) {
  if (!(eps > 0.0))
    throw std::invalid_argument("nonlinear_weights: eps must be > 0");
  const double t0 = linear.c0 / std::pow(eps + ind.center, tau);
  const double tl = linear.cl / std::pow(eps + ind.left, tau);
  const double tr = linear.cr / std::pow(eps + ind.right, tau);
  const double sum = t0 + tl + tr;
  return {t0 / sum, tl / sum, tr / sum};
}

CellWeightSet cell_weight_set(double u_m, double u_c, double u_p, double h,
                              const CwenoParams& params) {
  const Indicators ind = smoothness_indicators(u_m, u_c, u_p);
  const NonlinearWeights w =
      nonlinear_weights(ind, params.linear, h * h, params.tau);

  CellWeightSet set;
  set.w0 = w.w0;
  set.wl = w.wl;
  set.wr = w.wr;
  const auto p0r = p0_edge(kP2r, kPLr, kPRr, params.linear);
  const auto p0l = p0_edge(kP2l, kPLl, kPRl, params.linear);
  for (int i = 0; i < 3; ++i) {
    set.wminus[i] = w.w0 * p0r[i] + w.wl * kPLr[i] + w.wr * kPRr[i];
    set.wplus[i] = w.w0 * p0l[i] + w.wl * kPLl[i] + w.wr * kPRl[i];
  }
  return set;
}

BedPair reconstruct_bed(const StateVector& state,
                        const std::vector<CellWeightSet>& weights) {
  const int n = state.size();
  if (static_cast<int>(weights.size()) != n)
    throw std::invalid_argument("reconstruct_bed: weight count mismatch");
  BedPair bed;
  bed.u_minus.resize(n);
  bed.u_plus.resize(n);
  for (int j = 0; j < n; ++j) {
    const int jm = (j + n - 1) % n;
    const int jp = (j + 1) % n;
    const int jpp = (j + 2) % n;
    // u^-_{j+1/2}: cell j at its right edge
    bed.u_minus[j] = weights[j].wminus[0] * state[jm] +
                     weights[j].wminus[1] * state[j] +
                     weights[j].wminus[2] * state[jp];
    // u^+_{j+1/2}: cell j+1 at its left edge
    bed.u_plus[j] = weights[jp].wplus[0] * state[j] +
                    weights[jp].wplus[1] * state[jp] +
                    weights[jp].wplus[2] * state[jpp];
  }
  return bed;
}

std::vector<CellWeightSet> weight_sets_from_state(const StateVector& state,
                                                  double h,
                                                  const CwenoParams& params) {
  const int n = state.size();
  std::vector<CellWeightSet> w(n);
  for (int j = 0; j < n; ++j) {
    const int jm = (j + n - 1) % n;
    const int jp = (j + 1) % n;
    w[j] = cell_weight_set(state[jm], state[j], state[jp], h, params);
  }
  return w;
}

BedPair standard_cweno_bed(const StateVector& state, double h,
                           const CwenoParams& params) {
  return reconstruct_bed(state, weight_sets_from_state(state, h, params));
}

}  // namespace quinpi

#include "irk/butcher.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quinpi {

ButcherTableau dirk3_tableau() {
  const double lam = 0.4358665215;
  ButcherTableau t;
  t.stages = 3;
  t.a = {{lam, 0.0, 0.0},
         {(1.0 - lam) / 2.0, lam, 0.0},
         {-1.5 * lam * lam + 4.0 * lam - 0.25,
          1.5 * lam * lam - 5.0 * lam + 1.25, lam}};
  t.b = t.a.back();  // stiffly accurate
  t.c = {lam, (1.0 + lam) / 2.0, 1.0};
  return t;
}

ButcherTableau composite_euler_tableau(const ButcherTableau& dirk) {
  std::vector<double> c = dirk.c;
  std::sort(c.begin(), c.end());
  for (size_t k = 1; k < c.size(); ++k)
    if (std::fabs(c[k] - c[k - 1]) < 1e-14)
      throw std::invalid_argument(
          "composite_euler_tableau: coincident abscissae");

  const int s = dirk.stages;
  ButcherTableau t;
  t.stages = s;
  t.a.assign(s, std::vector<double>(s, 0.0));
  for (int k = 0; k < s; ++k)
    for (int l = 0; l <= k; ++l)
      t.a[k][l] = c[l] - (l > 0 ? c[l - 1] : 0.0);
  t.b = t.a.back();
  t.c = c;
  return t;
}

}  // namespace quinpi

#include "la/cyclic_banded.hpp"

#include <cmath>
#include <stdexcept>

namespace quinpi {

namespace {

constexpr double kPivotTol = 1e-14;

void check_pivot(double pivot, double scale) {
  if (std::fabs(pivot) < kPivotTol * scale)
    throw std::runtime_error("cyclic_banded_solve: singular matrix");
}

// Dense LU with partial pivoting, in place.
std::vector<double> dense_lu_solve(std::vector<std::vector<double>> a,
                                   std::vector<double> b, double scale) {
  const int n = static_cast<int>(b.size());
  for (int j = 0; j < n; ++j) {
    int p = j;
    for (int i = j + 1; i < n; ++i)
      if (std::fabs(a[i][j]) > std::fabs(a[p][j])) p = i;
    check_pivot(a[p][j], scale);
    if (p != j) {
      std::swap(a[p], a[j]);
      std::swap(b[p], b[j]);
    }
    for (int i = j + 1; i < n; ++i) {
      const double m = a[i][j] / a[j][j];
      if (m == 0.0) continue;
      for (int c = j + 1; c < n; ++c) a[i][c] -= m * a[j][c];
      b[i] -= m * b[j];
    }
  }
  for (int j = n - 1; j >= 0; --j) {
    double acc = b[j];
    for (int c = j + 1; c < n; ++c) acc -= a[j][c] * b[c];
    b[j] = acc / a[j][j];
  }
  return b;
}

// Non-cyclic banded LU with partial pivoting (LAPACK-style band storage
// with kb fill rows).  Factors once, then solves multiple right-hand sides.
class BandedLU {
 public:
  BandedLU(int n, int kb) : n_(n), kb_(kb), ldab_(3 * kb + 1),
                            ab_(static_cast<size_t>(ldab_) * n, 0.0),
                            ipiv_(n, 0) {}

  // Valid for j - 2*kb <= i <= j + kb.
  double& entry(int i, int j) { return ab_[j * ldab_ + (2 * kb_ + i - j)]; }

  void factor(double scale) {
    for (int j = 0; j < n_; ++j) {
      const int imax = std::min(j + kb_, n_ - 1);
      int p = j;
      for (int i = j + 1; i <= imax; ++i)
        if (std::fabs(entry(i, j)) > std::fabs(entry(p, j))) p = i;
      check_pivot(entry(p, j), scale);
      ipiv_[j] = p;
      const int jmax = std::min(j + 2 * kb_, n_ - 1);
      if (p != j)
        for (int c = j; c <= jmax; ++c) std::swap(entry(j, c), entry(p, c));
      for (int i = j + 1; i <= imax; ++i) {
        const double m = entry(i, j) / entry(j, j);
        entry(i, j) = m;
        for (int c = j + 1; c <= jmax; ++c) entry(i, c) -= m * entry(j, c);
      }
    }
  }

  std::vector<double> solve(std::vector<double> b) const {
    for (int j = 0; j < n_; ++j) {
      if (ipiv_[j] != j) std::swap(b[j], b[ipiv_[j]]);
      const int imax = std::min(j + kb_, n_ - 1);
      for (int i = j + 1; i <= imax; ++i)
        b[i] -= ab_[j * ldab_ + (2 * kb_ + i - j)] * b[j];
    }
    for (int j = n_ - 1; j >= 0; --j) {
      const int cmax = std::min(j + 2 * kb_, n_ - 1);
      double acc = b[j];
      for (int c = j + 1; c <= cmax; ++c)
        acc -= ab_[c * ldab_ + (2 * kb_ + j - c)] * b[c];
      b[j] = acc / ab_[j * ldab_ + 2 * kb_];
    }
    return b;
  }

 private:
  int n_, kb_, ldab_;
  std::vector<double> ab_;
  std::vector<int> ipiv_;
};

}  // namespace

CyclicBandedMatrix::CyclicBandedMatrix(int n, int half_bandwidth)
    : n_(n), kb_(half_bandwidth),
      bands_(static_cast<size_t>(2 * half_bandwidth + 1) * n, 0.0) {
  if (n < 3 || half_bandwidth < 1 || half_bandwidth > 2)
    throw std::invalid_argument("CyclicBandedMatrix: bad dimensions");
}

std::vector<double> CyclicBandedMatrix::multiply(
    const std::vector<double>& x) const {
  std::vector<double> y(n_, 0.0);
  for (int d = -kb_; d <= kb_; ++d)
    for (int j = 0; j < n_; ++j) y[j] += at(j, d) * x[column(j, d)];
  return y;
}

std::vector<std::vector<double>> CyclicBandedMatrix::dense() const {
  std::vector<std::vector<double>> a(n_, std::vector<double>(n_, 0.0));
  for (int j = 0; j < n_; ++j)
    for (int d = -kb_; d <= kb_; ++d) a[j][column(j, d)] += at(j, d);
  return a;
}

double CyclicBandedMatrix::max_abs() const {
  double m = 0.0;
  for (double v : bands_) m = std::max(m, std::fabs(v));
  return m;
}

std::vector<double> cyclic_banded_solve_dense(const CyclicBandedMatrix& m,
                                              const std::vector<double>& rhs) {
  return dense_lu_solve(m.dense(), rhs, std::max(m.max_abs(), 1e-300));
}

std::vector<double> cyclic_banded_solve_woodbury(
    const CyclicBandedMatrix& m, const std::vector<double>& rhs) {
  const int n = m.size();
  const int kb = m.half_bandwidth();
  if (n < 4 * kb + 2) return cyclic_banded_solve_dense(m, rhs);
  const double scale = std::max(m.max_abs(), 1e-300);

  // Split A = B + sum_c u_c e_c^T where B drops the periodic corner
  // entries; the corners only touch columns 0..kb-1 and n-kb..n-1.
  const int r = 2 * kb;
  std::vector<int> cols(r);
  for (int i = 0; i < kb; ++i) {
    cols[i] = n - kb + i;
    cols[kb + i] = i;
  }
  std::vector<std::vector<double>> u(r, std::vector<double>(n, 0.0));

  BandedLU lu(n, kb);
  for (int j = 0; j < n; ++j) {
    for (int d = -kb; d <= kb; ++d) {
      const double v = m.at(j, d);
      if (v == 0.0) continue;
      const int c = j + d;
      if (c >= 0 && c < n) {
        lu.entry(j, c) = v;
      } else {
        const int cc = c < 0 ? c + n : c - n;
        const int slot = c < 0 ? cc - (n - kb) : kb + cc;
        u[slot][j] = v;
      }
    }
  }
  lu.factor(scale);

  std::vector<double> y = lu.solve(rhs);
  std::vector<std::vector<double>> z(r);
  for (int q = 0; q < r; ++q) z[q] = lu.solve(u[q]);

  // Capacitance system (I + V^T Z) t = V^T y with V^T rows = e_{cols[p]}.
  std::vector<std::vector<double>> s(r, std::vector<double>(r, 0.0));
  std::vector<double> t(r, 0.0);
  double small_scale = 1.0;
  for (int p = 0; p < r; ++p) {
    for (int q = 0; q < r; ++q) {
      s[p][q] = (p == q ? 1.0 : 0.0) + z[q][cols[p]];
      small_scale = std::max(small_scale, std::fabs(s[p][q]));
    }
    t[p] = y[cols[p]];
  }
  t = dense_lu_solve(std::move(s), std::move(t), small_scale);

  for (int q = 0; q < r; ++q)
    for (int j = 0; j < n; ++j) y[j] -= z[q][j] * t[q];
  return y;
}

std::vector<double> cyclic_banded_solve(const CyclicBandedMatrix& m,
                                        const std::vector<double>& rhs) {
  if (static_cast<int>(rhs.size()) != m.size())
    throw std::invalid_argument("cyclic_banded_solve: size mismatch");
  if (m.size() <= 64) return cyclic_banded_solve_dense(m, rhs);
  return cyclic_banded_solve_woodbury(m, rhs);
}

}  // namespace quinpi

#ifndef QUINPI_LA_CYCLIC_BANDED_HPP
#define QUINPI_LA_CYCLIC_BANDED_HPP

#include <vector>

namespace quinpi {

// Square matrix whose row j couples the periodic neighbours
// u_{j-kb} .. u_{j+kb} (indices mod n).  Storage is by cyclic offset.
class CyclicBandedMatrix {
 public:
  CyclicBandedMatrix(int n, int half_bandwidth);

  int size() const { return n_; }
  int half_bandwidth() const { return kb_; }

  // Entry of row j at cyclic offset d in [-kb, kb].
  double& at(int row, int offset) {
    return bands_[(offset + kb_) * n_ + row];
  }
  double at(int row, int offset) const {
    return bands_[(offset + kb_) * n_ + row];
  }

  // Column index the (row, offset) entry acts on.
  int column(int row, int offset) const {
    int c = row + offset;
    if (c < 0) c += n_;
    if (c >= n_) c -= n_;
    return c;
  }

  std::vector<double> multiply(const std::vector<double>& x) const;
  std::vector<std::vector<double>> dense() const;

  double max_abs() const;

 private:
  int n_;
  int kb_;
  std::vector<double> bands_;  // (2kb+1) blocks of length n
};

// Banded LU with periodic low-rank correction; falls back to a dense
// factorization for n <= 64.  Throws std::runtime_error on a pivot below
// 1e-14 times the matrix scale.
std::vector<double> cyclic_banded_solve(const CyclicBandedMatrix& m,
                                        const std::vector<double>& rhs);

// The two routes individually, kept callable for cross-checks.
std::vector<double> cyclic_banded_solve_dense(const CyclicBandedMatrix& m,
                                              const std::vector<double>& rhs);
std::vector<double> cyclic_banded_solve_woodbury(
    const CyclicBandedMatrix& m, const std::vector<double>& rhs);

}  // namespace quinpi

#endif

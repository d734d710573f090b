#pragma once

#include <vector>

#include "sslab/grid.hpp"

namespace sslab {

struct CornerEntry {
  int row = 0;
  int col = 0;
  cxd value{0.0, 0.0};
};

// Complex banded matrix in the LAPACK general-band layout, plus a short list
// of far off-band entries (the periodic wrap corners). The band storage keeps
// the extra kl rows zgbtrf needs for fill-in.
class BandedMatrix {
 public:
  BandedMatrix(int n, int kl, int ku);

  int size() const { return n_; }
  int lower() const { return kl_; }
  int upper() const { return ku_; }

  bool in_band(int i, int j) const { return i - j <= kl_ && j - i <= ku_; }

  // Accumulates into the band or, when (i, j) lies outside it, the corner list.
  void add(int i, int j, cxd value);
  // Band entry (zero outside the band; corners are not consulted).
  cxd band_at(int i, int j) const;

  const std::vector<CornerEntry>& corners() const { return corners_; }

  void matvec(const cxd* x, cxd* y) const;
  std::vector<cxd> matvec(const std::vector<cxd>& x) const;

  // Dense copy, corners included (test oracles only; O(n^2) storage).
  std::vector<cxd> dense() const;

  const std::vector<cxd>& band_storage() const { return ab_; }
  int leading_dim() const { return ldab_; }

 private:
  int n_, kl_, ku_, ldab_;
  std::vector<cxd> ab_;  // column-major ldab x n; A(i,j) at ab_[kl+ku+i-j + j*ldab]
  std::vector<CornerEntry> corners_;
};

// LU factorization of a BandedMatrix: zgbtrf on the band part and a low-rank
// correction for the corner entries (Woodbury identity; the corner columns
// form the low-rank factor, so its rank equals the number of distinct corner
// columns).
class BandedFactor {
 public:
  // Throws std::runtime_error when the band or the corner capacitance system
  // is numerically singular.
  explicit BandedFactor(const BandedMatrix& a);

  void solve_inplace(std::vector<cxd>& b) const;
  std::vector<cxd> solve(const std::vector<cxd>& b) const;

 private:
  void band_solve(cxd* b, int nrhs) const;

  int n_, kl_, ku_, ldab_;
  std::vector<cxd> lu_;
  std::vector<int> ipiv_;
  std::vector<int> corner_cols_;
  std::vector<cxd> zmat_;   // n x r, columns are band^{-1} * (corner column j)
  std::vector<cxd> kfact_;  // r x r LU of the capacitance matrix
  std::vector<int> kpiv_;
};

}  // namespace sslab

#include "sslab/banded.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace sslab {

static_assert(std::is_same_v<lapack_int, int>, "32-bit LAPACK integers expected");

BandedMatrix::BandedMatrix(int n, int kl, int ku) : n_(n), kl_(kl), ku_(ku) {
  if (n < 1 || kl < 0 || ku < 0) throw std::invalid_argument("BandedMatrix: bad dimensions");
  ldab_ = 2 * kl_ + ku_ + 1;
  ab_.assign(static_cast<std::size_t>(ldab_) * n_, cxd{0.0, 0.0});
}

void BandedMatrix::add(int i, int j, cxd value) {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("BandedMatrix::add");
  if (in_band(i, j)) {
    ab_[static_cast<std::size_t>(j) * ldab_ + (kl_ + ku_ + i - j)] += value;
    return;
  }
  for (CornerEntry& e : corners_) {
    if (e.row == i && e.col == j) {
      e.value += value;
      return;
    }
  }
  corners_.push_back({i, j, value});
}

cxd BandedMatrix::band_at(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_ || !in_band(i, j)) return cxd{0.0, 0.0};
  return ab_[static_cast<std::size_t>(j) * ldab_ + (kl_ + ku_ + i - j)];
}

void BandedMatrix::matvec(const cxd* x, cxd* y) const {
  std::fill(y, y + n_, cxd{0.0, 0.0});
  for (int j = 0; j < n_; ++j) {
    const cxd xj = x[j];
    if (xj == cxd{0.0, 0.0}) continue;
    const int ilo = std::max(0, j - ku_), ihi = std::min(n_ - 1, j + kl_);
    const cxd* col = ab_.data() + static_cast<std::size_t>(j) * ldab_ + (kl_ + ku_ - j);
    for (int i = ilo; i <= ihi; ++i) y[i] += col[i] * xj;
  }
  for (const CornerEntry& e : corners_) y[e.row] += e.value * x[e.col];
}

std::vector<cxd> BandedMatrix::matvec(const std::vector<cxd>& x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("BandedMatrix::matvec size");
  std::vector<cxd> y(n_);
  matvec(x.data(), y.data());
  return y;
}

std::vector<cxd> BandedMatrix::dense() const {
  std::vector<cxd> a(static_cast<std::size_t>(n_) * n_, cxd{0.0, 0.0});
  for (int j = 0; j < n_; ++j)
    for (int i = std::max(0, j - ku_); i <= std::min(n_ - 1, j + kl_); ++i)
      a[static_cast<std::size_t>(j) * n_ + i] = band_at(i, j);
  for (const CornerEntry& e : corners_) a[static_cast<std::size_t>(e.col) * n_ + e.row] += e.value;
  return a;
}

BandedFactor::BandedFactor(const BandedMatrix& a)
    : n_(a.size()),
      kl_(a.lower()),
      ku_(a.upper()),
      ldab_(a.leading_dim()),
      lu_(a.band_storage()),
      ipiv_(a.size()) {
  int info = LAPACKE_zgbtrf(LAPACK_COL_MAJOR, n_, n_, kl_, ku_, lu_.data(), ldab_, ipiv_.data());
  if (info != 0)
    throw std::runtime_error("banded LU failed (singular at pivot " + std::to_string(info) +
                             "); adjust the spectral shift");

  for (const CornerEntry& e : a.corners()) corner_cols_.push_back(e.col);
  std::sort(corner_cols_.begin(), corner_cols_.end());
  corner_cols_.erase(std::unique(corner_cols_.begin(), corner_cols_.end()), corner_cols_.end());
  const int r = static_cast<int>(corner_cols_.size());
  if (r == 0) return;

  // Woodbury data: correction = U E^T with U the stacked corner columns and
  // E the identity columns they occupy.
  zmat_.assign(static_cast<std::size_t>(n_) * r, cxd{0.0, 0.0});
  for (const CornerEntry& e : a.corners()) {
    const int l = static_cast<int>(std::lower_bound(corner_cols_.begin(), corner_cols_.end(),
                                                    e.col) -
                                   corner_cols_.begin());
    zmat_[static_cast<std::size_t>(l) * n_ + e.row] += e.value;
  }
  band_solve(zmat_.data(), r);

  kfact_.assign(static_cast<std::size_t>(r) * r, cxd{0.0, 0.0});
  for (int l = 0; l < r; ++l)
    for (int j = 0; j < r; ++j)
      kfact_[static_cast<std::size_t>(l) * r + j] =
          (j == l ? cxd{1.0, 0.0} : cxd{0.0, 0.0}) +
          zmat_[static_cast<std::size_t>(l) * n_ + corner_cols_[j]];
  kpiv_.resize(r);
  info = LAPACKE_zgetrf(LAPACK_COL_MAJOR, r, r, kfact_.data(), r, kpiv_.data());
  if (info != 0)
    throw std::runtime_error("corner capacitance system singular; adjust the spectral shift");
}

void BandedFactor::band_solve(cxd* b, int nrhs) const {
  const int info = LAPACKE_zgbtrs(LAPACK_COL_MAJOR, 'N', n_, kl_, ku_, nrhs, lu_.data(), ldab_,
                                  ipiv_.data(), b, n_);
  if (info != 0) throw std::runtime_error("banded back-substitution failed");
}

void BandedFactor::solve_inplace(std::vector<cxd>& b) const {
  if (static_cast<int>(b.size()) != n_) throw std::invalid_argument("BandedFactor::solve size");
  band_solve(b.data(), 1);
  const int r = static_cast<int>(corner_cols_.size());
  if (r == 0) return;
  std::vector<cxd> w(r);
  for (int j = 0; j < r; ++j) w[j] = b[corner_cols_[j]];
  const int info =
      LAPACKE_zgetrs(LAPACK_COL_MAJOR, 'N', r, 1, kfact_.data(), r, kpiv_.data(), w.data(), r);
  if (info != 0) throw std::runtime_error("corner correction solve failed");
  for (int l = 0; l < r; ++l) {
    const cxd wl = w[l];
    const cxd* zcol = zmat_.data() + static_cast<std::size_t>(l) * n_;
    for (int i = 0; i < n_; ++i) b[i] -= zcol[i] * wl;
  }
}

std::vector<cxd> BandedFactor::solve(const std::vector<cxd>& b) const {
  std::vector<cxd> x = b;
  solve_inplace(x);
  return x;
}

}  // namespace sslab

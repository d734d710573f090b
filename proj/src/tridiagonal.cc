#include "sslab/tridiagonal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sslab {
namespace {

void check_sizes(std::span<const cxd> diag, std::span<const cxd> off, std::span<const cxd> rhs) {
  if (diag.size() != rhs.size())
    throw std::invalid_argument("tridiagonal: diag/rhs size mismatch");
  if (off.size() + 1 != diag.size())
    throw std::invalid_argument("tridiagonal: off diagonal must have n-1 entries");
}

}  // namespace

std::vector<cxd> solve_tridiagonal(std::span<const cxd> diag, std::span<const cxd> off,
                                   std::span<const cxd> rhs) {
  check_sizes(diag, off, rhs);
  const std::size_t n = diag.size();
  std::vector<cxd> c(n, cxd{0.0, 0.0});  // modified super-diagonal
  std::vector<cxd> x(rhs.begin(), rhs.end());
  cxd piv = diag[0];
  if (std::abs(piv) == 0.0) throw std::runtime_error("tridiagonal: zero pivot at row 0");
  if (n > 1) c[0] = off[0] / piv;
  x[0] /= piv;
  for (std::size_t i = 1; i < n; ++i) {
    piv = diag[i] - off[i - 1] * c[i - 1];
    const double scale = std::abs(diag[i]) + std::abs(off[i - 1]);
    if (std::abs(piv) < 1e-300 * std::max(1.0, scale))
      throw std::runtime_error("tridiagonal: vanishing pivot at row " + std::to_string(i) +
                               " (|pivot| = " + std::to_string(std::abs(piv)) + ")");
    if (i + 1 < n) c[i] = off[i] / piv;
    x[i] = (x[i] - off[i - 1] * x[i - 1]) / piv;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
  return x;
}

std::vector<cxd> solve_cyclic_tridiagonal(std::span<const cxd> diag, std::span<const cxd> off,
                                          cxd corner, std::span<const cxd> rhs) {
  check_sizes(diag, off, rhs);
  const std::size_t n = diag.size();
  if (n == 1) {
    const cxd d = diag[0] + corner;  // degenerate 1x1 "ring"
    if (std::abs(d) == 0.0) throw std::runtime_error("cyclic tridiagonal: singular 1x1 system");
    return {rhs[0] / d};
  }
  if (corner == cxd{0.0, 0.0}) return solve_tridiagonal(diag, off, rhs);

  // A = T' + u v^T with u = (gamma, 0, .., corner)^T, v = (1, 0, .., corner/gamma)^T,
  // T' = T with T'(0,0) -= gamma and T'(n-1,n-1) -= corner^2/gamma.
  const cxd gamma = -diag[0];
  std::vector<cxd> dmod(diag.begin(), diag.end());
  dmod[0] -= gamma;
  dmod[n - 1] -= corner * corner / gamma;

  std::vector<cxd> u(n, cxd{0.0, 0.0});
  u[0] = gamma;
  u[n - 1] = corner;

  std::vector<cxd> y = solve_tridiagonal(dmod, off, rhs);
  std::vector<cxd> z = solve_tridiagonal(dmod, off, u);

  const cxd vy = y[0] + (corner / gamma) * y[n - 1];
  const cxd vz = z[0] + (corner / gamma) * z[n - 1];
  const cxd denom = cxd{1.0, 0.0} + vz;
  if (std::abs(denom) < 1e-14)
    throw std::runtime_error("cyclic tridiagonal: singular system (Sherman-Morrison denominator ~ 0)");
  const cxd f = vy / denom;
  for (std::size_t i = 0; i < n; ++i) y[i] -= f * z[i];
  return y;
}

}  // namespace sslab

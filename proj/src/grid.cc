#include "sslab/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace sslab {

std::shared_ptr<const Grid1D> Grid1D::make(double length_L, int n_points) {
  if (length_L <= 0.0) throw std::domain_error("Grid1D: length must be positive");
  if (n_points < 2 || n_points % 2 != 0)
    throw std::domain_error("Grid1D: n_points must be even and >= 2");
  auto g = std::make_shared<Grid1D>();
  g->length_L = length_L;
  g->n_points = n_points;
  g->mesh_dx = length_L / n_points;
  g->points.resize(n_points);
  g->wavenumbers.resize(n_points);
  const double dk = 2.0 * M_PI / length_L;
  for (int m = 0; m < n_points; ++m) {
    g->points[m] = -0.5 * length_L + m * g->mesh_dx;
    const int j = (m <= n_points / 2) ? m : m - n_points;
    g->wavenumbers[m] = dk * j;
  }
  return g;
}

double norm_l2(const ComplexField& f) {
  double s = 0.0;
  for (const cxd& z : f.v) s += std::norm(z);
  return std::sqrt(s * f.grid->mesh_dx);
}

double norm_samples(const ComplexField& f) {
  double s = 0.0;
  for (const cxd& z : f.v) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs(const ComplexField& f) {
  double s = 0.0;
  for (const cxd& z : f.v) s = std::max(s, std::abs(z));
  return s;
}

bool all_finite(const ComplexField& f) {
  for (const cxd& z : f.v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

}  // namespace sslab

#include "sslab/initial_conditions.hpp"

#include <cmath>
#include <stdexcept>

#include "sslab/rng.hpp"

namespace sslab {

ComplexField make_soliton(const GridPtr& grid, double A, double beta, double gamma) {
  if (beta >= 0.0) throw std::domain_error("make_soliton: requires beta < 0");
  if (gamma <= 0.0) throw std::domain_error("make_soliton: requires gamma > 0");
  ComplexField f(grid);
  const double amp = A * std::sqrt(2.0 / gamma);
  const double w = A / std::sqrt(-beta);
  for (int m = 0; m < grid->n_points; ++m)
    f.v[m] = cxd{amp / std::cosh(w * grid->points[m]), 0.0};
  return f;
}

ComplexField make_plane_wave(const GridPtr& grid, double A, double gamma) {
  if (gamma <= 0.0) throw std::domain_error("make_plane_wave: requires gamma > 0");
  ComplexField f(grid);
  const cxd val{A / std::sqrt(gamma), 0.0};
  for (auto& z : f.v) z = val;
  return f;
}

ComplexField make_noise(const GridPtr& grid, double std, std::uint64_t seed) {
  if (std < 0.0) throw std::domain_error("make_noise: std must be >= 0");
  ComplexField f(grid);
  if (std == 0.0) return f;
  Rng rng(seed);
  const double s = std / std::sqrt(2.0);
  for (int m = 0; m < grid->n_points; ++m) {
    const double re = s * rng.next_normal();
    const double im = s * rng.next_normal();
    f.v[m] = cxd{re, im};
  }
  return f;
}

ComplexField make_gaussian(const GridPtr& grid, double sigma) {
  if (sigma <= 0.0) throw std::domain_error("make_gaussian: requires sigma > 0");
  ComplexField f(grid);
  for (int m = 0; m < grid->n_points; ++m) {
    const double x = grid->points[m];
    f.v[m] = cxd{std::exp(-x * x / (2.0 * sigma * sigma)), 0.0};
  }
  return f;
}

}  // namespace sslab

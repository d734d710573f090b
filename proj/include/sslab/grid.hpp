#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace sslab {

using cxd = std::complex<double>;

// Uniform periodic grid on [-L/2, L/2): x_m = -L/2 + m*dx, m = 0..N-1.
// The left endpoint is stored, the right one is the periodic wrap image.
//
// Wavenumbers follow the standard DFT layout: bin j holds
//   k_j = 2*pi*j/L          for j = 0..N/2
//   k_j = 2*pi*(j-N)/L      for j = N/2+1..N-1
// so the lattice covers -pi/dx < k <= pi/dx with k_max = pi/dx at j = N/2.
struct Grid1D {
  double length_L = 0.0;
  int n_points = 0;
  double mesh_dx = 0.0;
  std::vector<double> points;
  std::vector<double> wavenumbers;

  double k_max() const { return wavenumbers.empty() ? 0.0 : 3.14159265358979323846 / mesh_dx; }

  static std::shared_ptr<const Grid1D> make(double length_L, int n_points);
};

using GridPtr = std::shared_ptr<const Grid1D>;

// Complex samples u(x_m) on a shared grid.
struct ComplexField {
  GridPtr grid;
  std::vector<cxd> v;

  ComplexField() = default;
  explicit ComplexField(GridPtr g) : grid(std::move(g)), v(grid->n_points, cxd{0.0, 0.0}) {}
  ComplexField(GridPtr g, std::vector<cxd> values) : grid(std::move(g)), v(std::move(values)) {}

  int size() const { return static_cast<int>(v.size()); }
};

// Discrete L2 norm: sqrt(sum |u_m|^2 * dx).
double norm_l2(const ComplexField& f);
// Plain Euclidean norm of the sample vector.
double norm_samples(const ComplexField& f);
double max_abs(const ComplexField& f);
bool all_finite(const ComplexField& f);

}  // namespace sslab

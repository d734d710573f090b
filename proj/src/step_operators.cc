#include "sslab/step_operators.hpp"

#include <cmath>
#include <stdexcept>

#include "sslab/fft.hpp"
#include "sslab/kernels.hpp"
#include "sslab/tridiagonal.hpp"

namespace sslab {

StepOperators StepOperators::make(const GridPtr& grid, DispersiveKind kind, double beta,
                                  double dt) {
  StepOperators ops;
  ops.dispersive_kind = kind;
  ops.grid = grid;
  ops.beta = beta;
  ops.dt = dt;
  const double dx = grid->mesh_dx;
  ops.r = dt / (dx * dx);
  const int n = grid->n_points;
  ops.multiplier.resize(n);
  switch (kind) {
    case DispersiveKind::spectral:
      for (int j = 0; j < n; ++j) {
        const double k = grid->wavenumbers[j];
        const double phi = beta * k * k * dt;
        ops.multiplier[j] = cxd{std::cos(phi), std::sin(phi)};
      }
      break;
    case DispersiveKind::fd_periodic:
      for (int j = 0; j < n; ++j) {
        const double s = std::sin(0.5 * grid->wavenumbers[j] * dx);
        const double P = 2.0 * std::atan(2.0 * beta * ops.r * s * s);
        ops.multiplier[j] = cxd{std::cos(P), std::sin(P)};
      }
      break;
    case DispersiveKind::fd_dirichlet:
      // sine-basis factors for mode j = 0..N-1 (j = 0 unused)
      for (int j = 0; j < n; ++j) {
        const double lj = -4.0 * std::pow(std::sin(M_PI * j / (2.0 * n)), 2);
        const cxd c{0.0, 0.5 * beta * ops.r * lj};
        ops.multiplier[j] = (cxd{1.0, 0.0} - c) / (cxd{1.0, 0.0} + c);
      }
      break;
  }
  return ops;
}

ComplexField nonlinear_step(const ComplexField& u, double gamma, double dt) {
  ComplexField out = u;
  kernels::phase_rotate(out.v, gamma, dt);
  return out;
}

ComplexField dispersive_step_spectral(const ComplexField& u, double beta, double dt) {
  StepOperators ops = StepOperators::make(u.grid, DispersiveKind::spectral, beta, dt);
  return dispersive_step(ops, u);
}

namespace {

ComplexField fd_periodic_direct(const ComplexField& u, double beta, double dt) {
  // (I + i*beta*r/2 * A) u' = (I - i*beta*r/2 * A) u, A the periodic
  // second-difference matrix (-2 main diagonal, 1 off and corners).
  const int n = u.grid->n_points;
  const double r = dt / (u.grid->mesh_dx * u.grid->mesh_dx);
  const cxd c{0.0, 0.5 * beta * r};
  std::vector<cxd> rhs(n);
  for (int m = 0; m < n; ++m) {
    const cxd lap = u.v[(m + 1) % n] - 2.0 * u.v[m] + u.v[(m + n - 1) % n];
    rhs[m] = u.v[m] - c * lap;
  }
  std::vector<cxd> diag(n, cxd{1.0, 0.0} - 2.0 * c);
  std::vector<cxd> off(n - 1, c);
  ComplexField out(u.grid);
  out.v = solve_cyclic_tridiagonal(diag, off, c, rhs);
  return out;
}

}  // namespace

ComplexField dispersive_step_fd_periodic(const ComplexField& u, double beta, double dt,
                                         bool spectral_path) {
  if (!spectral_path) return fd_periodic_direct(u, beta, dt);
  StepOperators ops = StepOperators::make(u.grid, DispersiveKind::fd_periodic, beta, dt);
  return dispersive_step(ops, u);
}

ComplexField dispersive_step_fd_dirichlet(const ComplexField& u, double beta, double dt) {
  const int n = u.grid->n_points;
  if (std::abs(u.v[0]) != 0.0)
    throw std::invalid_argument("dispersive_step_fd_dirichlet: boundary sample u[0] must be zero");
  const double r = dt / (u.grid->mesh_dx * u.grid->mesh_dx);
  const cxd c{0.0, 0.5 * beta * r};
  const int ni = n - 1;  // interior unknowns m = 1..N-1
  std::vector<cxd> rhs(ni);
  for (int m = 1; m < n; ++m) {
    const cxd um1 = (m - 1 >= 1) ? u.v[m - 1] : cxd{0.0, 0.0};
    const cxd up1 = (m + 1 <= n - 1) ? u.v[m + 1] : cxd{0.0, 0.0};
    rhs[m - 1] = u.v[m] - c * (up1 - 2.0 * u.v[m] + um1);
  }
  std::vector<cxd> diag(ni, cxd{1.0, 0.0} - 2.0 * c);
  std::vector<cxd> off(ni - 1, c);
  ComplexField out(u.grid);
  std::vector<cxd> sol = solve_tridiagonal(diag, off, rhs);
  out.v[0] = cxd{0.0, 0.0};
  for (int m = 1; m < n; ++m) out.v[m] = sol[m - 1];
  return out;
}

ComplexField dispersive_step(const StepOperators& ops, const ComplexField& u) {
  switch (ops.dispersive_kind) {
    case DispersiveKind::spectral:
    case DispersiveKind::fd_periodic: {
      ComplexField out = u;
      dft_inplace(out.v);
      kernels::multiply(out.v, ops.multiplier);
      idft_inplace(out.v);
      return out;
    }
    case DispersiveKind::fd_dirichlet:
      return dispersive_step_fd_dirichlet(u, ops.beta, ops.dt);
  }
  throw std::logic_error("dispersive_step: unknown kind");
}

}  // namespace sslab

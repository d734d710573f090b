#pragma once

#include "sslab/grid.hpp"

namespace sslab {

enum class DispersiveKind { spectral, fd_periodic, fd_dirichlet };

// Precomputed per-step data for one dispersive solve.
//  spectral:     Fourier multiplier exp(i beta k^2 dt)
//  fd_periodic:  Crank-Nicolson as the unimodular Fourier multiplier
//                exp(i P(k)), P = 2 atan(2 beta r sin^2(k dx / 2)), r = dt/dx^2
//  fd_dirichlet: Crank-Nicolson solved in direct space on the interior points
//                (multiplier slot holds the sine-mode factors for reference)
struct StepOperators {
  DispersiveKind dispersive_kind = DispersiveKind::spectral;
  GridPtr grid;
  double beta = 0.0;
  double dt = 0.0;
  double r = 0.0;  // dt / dx^2
  std::vector<cxd> multiplier;

  static StepOperators make(const GridPtr& grid, DispersiveKind kind, double beta, double dt);
};

// u <- u * exp(i gamma |u|^2 dt)  (exact solution of the nonlinear sub-step).
ComplexField nonlinear_step(const ComplexField& u, double gamma, double dt);

// Fourier multiplier exp(i beta k^2 dt).
ComplexField dispersive_step_spectral(const ComplexField& u, double beta, double dt);

// Periodic Crank-Nicolson step. `spectral_path` selects between the exact
// Fourier-multiplier form and the direct cyclic-tridiagonal solve of
// (I + i beta r/2 A) u' = (I - i beta r/2 A) u; the two agree to roundoff and
// serve as mutual oracles.
ComplexField dispersive_step_fd_periodic(const ComplexField& u, double beta, double dt,
                                         bool spectral_path = true);

// Dirichlet Crank-Nicolson step. Sample m = 0 holds the boundary value at
// x = -L/2 and must be zero (the right boundary is the unstored wrap point);
// interior samples m = 1..N-1 are solved with the plain tridiagonal system.
// Sine mode j is multiplied by (1 - i beta r lambda_j/2)/(1 + i beta r lambda_j/2),
// lambda_j = -4 sin^2(pi j / (2M)) with M = N.
ComplexField dispersive_step_fd_dirichlet(const ComplexField& u, double beta, double dt);

// Apply the precomputed dispersive step of `ops` to u.
ComplexField dispersive_step(const StepOperators& ops, const ComplexField& u);

}  // namespace sslab

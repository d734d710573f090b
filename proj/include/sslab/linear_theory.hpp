#pragma once

#include <optional>
#include <vector>

#include "sslab/simulation.hpp"

namespace sslab {

// Parameter maps between the physical configuration and the rescaled frame of
// the near-k_max envelope analysis.
struct RescaledParams {
  double epsilon = 0.0;       // dx / 2
  double D = 0.0;             // C beta^2 + beta / A^2   (C - 1 for beta=-1, A=1)
  double Lambda_scale = 0.0;  // C beta^2 / A^2, Lambda = Lambda_scale * lambda
  double V_amplitude = 0.0;   // 2 C beta^2
  double delta = 0.0;         // -omega_b - 1/(C beta)
  double X_scale = 0.0;       // physical x per unit rescaled X: sqrt(-beta) eps / A
  double ratio_C = 0.0;
  double beta = 0.0;
  double amplitude_A = 0.0;
  double length_L = 0.0;

  // Half-width of the rescaled periodic domain: (A / sqrt(-beta)) L / (2 eps).
  double X_half() const;
  double lambda_from_Lambda(double Lambda_real) const { return Lambda_real / Lambda_scale; }
};

RescaledParams rescale_params(const SimConfig& config);

// Rescaled parameters for a target D with the other constants fixed: inverts
// D = C beta^2 + beta/A^2 for C and rebuilds the dependent scales. Throws if
// the implied C is not positive.
RescaledParams rescale_for_D(double D, double beta, double A, double length_L, int n_points);

// Per-step phase of the periodic Crank-Nicolson dispersive solve,
// P = 2 atan(2 beta r sin^2(k dx / 2)), principal value in (-pi, pi].
double phase_symbol_P(double k, double beta, double r, double dx);

// Wavenumbers where |beta| k^2 dt = m pi (spectral-step resonances), m = 1..m_max.
std::vector<double> resonance_wavenumbers(double beta, double dt, int m_max);

// dt above which the spectral split-step scheme destabilizes on a localized
// background: dx^2 / (pi |beta|).
double threshold_ssm_spectral(double beta, double dx);

// Plane-wave threshold of the finite-difference scheme: dt = dx / sqrt(2 beta A^2)
// for beta > 0; nullopt marks unconditional stability (beta < 0).
std::optional<double> threshold_fd_planewave(double beta, double A, double dx);

// Soliton-background stability bound of the finite-difference scheme:
// stable for C < 1/(|beta| A^2); instability requires D > 0.
double threshold_fd_soliton(double beta, double A);

struct GrowthCurvePoint {
  double k = 0.0;
  double rate = 0.0;      // numerical-instability rate (modulational band masked out)
  double rate_raw = 0.0;  // unmasked ln(spectral radius)/dt of the one-step map
};

enum class SsmMethod { spectral, finite_difference };

// Exact one-step 2x2 map on a plane-wave background coupling (u(k), u*(-k)):
//   M = [ e^{i phi}(1+ia)   e^{i phi} ia  ]        phi = per-step dispersive phase
//       [ -e^{-i phi} ia    e^{-i phi}(1-ia) ]     a   = A^2 dt
// rate_raw = ln(spectral radius)/dt. The long-wave modulational band
// (|phi| < 2 atan a, the discrete image of the continuum-unstable band
// beta k^2 (beta k^2 + 2 A^2) < 0) is physical, not numerical, so `rate`
// reports zero there and rate_raw elsewhere.
std::vector<GrowthCurvePoint> planewave_growth_curve(SsmMethod method, double beta, double gamma,
                                                     double A, double dt, double dx,
                                                     int n_samples = 512);

// Continuum modulational-instability rate of the plane wave (A^2-scaled
// amplitude A/sqrt(gamma)): sqrt(-beta k^2 (beta k^2 + 2 A^2)) where positive,
// else 0.
double continuum_mi_rate(double k, double beta, double A);

}  // namespace sslab

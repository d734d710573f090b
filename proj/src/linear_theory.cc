#include "sslab/linear_theory.hpp"

#include <cmath>
#include <stdexcept>

namespace sslab {

double RescaledParams::X_half() const {
  return (amplitude_A / std::sqrt(-beta)) * length_L / (2.0 * epsilon);
}

RescaledParams rescale_params(const SimConfig& config_in) {
  SimConfig config = config_in;
  config.finalize();
  if (config.beta >= 0.0) throw std::domain_error("rescale_params: soliton frame requires beta < 0");
  if (config.ratio_C <= 0.0) throw std::domain_error("rescale_params: C must be positive");
  RescaledParams p;
  const double beta = config.beta, A = config.amplitude_A, C = config.ratio_C;
  const double omega_b = A * A;
  p.epsilon = 0.5 * config.mesh_dx();
  p.D = C * beta * beta + beta / (A * A);
  p.Lambda_scale = C * beta * beta / (A * A);
  p.V_amplitude = 2.0 * C * beta * beta;
  p.delta = -omega_b - 1.0 / (C * beta);
  p.X_scale = std::sqrt(-beta) * p.epsilon / A;
  p.ratio_C = C;
  p.beta = beta;
  p.amplitude_A = A;
  p.length_L = config.length_L;
  return p;
}

RescaledParams rescale_for_D(double D, double beta, double A, double length_L, int n_points) {
  if (beta >= 0.0) throw std::domain_error("rescale_for_D: requires beta < 0");
  const double C = (D - beta / (A * A)) / (beta * beta);
  if (C <= 0.0) throw std::domain_error("rescale_for_D: target D implies a nonpositive C");
  SimConfig config;
  config.beta = beta;
  config.amplitude_A = A;
  config.length_L = length_L;
  config.n_points = n_points;
  config.ratio_C = C;
  return rescale_params(config);
}

double phase_symbol_P(double k, double beta, double r, double dx) {
  const double s = std::sin(0.5 * k * dx);
  return 2.0 * std::atan(2.0 * beta * r * s * s);
}

std::vector<double> resonance_wavenumbers(double beta, double dt, int m_max) {
  if (beta == 0.0) throw std::domain_error("resonance_wavenumbers: beta must be nonzero");
  if (dt <= 0.0) throw std::domain_error("resonance_wavenumbers: dt must be positive");
  std::vector<double> out;
  out.reserve(m_max);
  for (int m = 1; m <= m_max; ++m) out.push_back(std::sqrt(m * M_PI / (std::abs(beta) * dt)));
  return out;
}

double threshold_ssm_spectral(double beta, double dx) {
  if (beta == 0.0) throw std::domain_error("threshold_ssm_spectral: beta must be nonzero");
  return dx * dx / (M_PI * std::abs(beta));
}

std::optional<double> threshold_fd_planewave(double beta, double A, double dx) {
  if (beta == 0.0) throw std::domain_error("threshold_fd_planewave: beta must be nonzero");
  if (beta < 0.0) return std::nullopt;  // unconditionally stable
  return dx / std::sqrt(2.0 * beta * A * A);
}

double threshold_fd_soliton(double beta, double A) {
  if (beta >= 0.0) throw std::domain_error("threshold_fd_soliton: requires beta < 0");
  if (A == 0.0) throw std::domain_error("threshold_fd_soliton: requires A != 0");
  return 1.0 / (std::abs(beta) * A * A);
}

double continuum_mi_rate(double k, double beta, double A) {
  const double q = beta * k * k;
  const double disc = -q * (q + 2.0 * A * A);
  return disc > 0.0 ? std::sqrt(disc) : 0.0;
}

std::vector<GrowthCurvePoint> planewave_growth_curve(SsmMethod method, double beta, double gamma,
                                                     double A, double dt, double dx,
                                                     int n_samples) {
  if (gamma <= 0.0) throw std::domain_error("planewave_growth_curve: gamma must be > 0");
  if (n_samples < 2) throw std::domain_error("planewave_growth_curve: need n_samples >= 2");
  const double kmax = M_PI / dx;
  const double a = A * A * dt;  // gamma |u_pw|^2 dt
  const double mi_half_width = 2.0 * std::atan(std::abs(a));
  std::vector<GrowthCurvePoint> curve(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    const double k = kmax * i / (n_samples - 1);
    double phi;
    if (method == SsmMethod::spectral) {
      phi = std::remainder(beta * k * k * dt, 2.0 * M_PI);  // principal value
    } else {
      phi = phase_symbol_P(k, beta, dt / (dx * dx), dx);
    }
    // eigenvalues of the unimodular 2x2 map: trace tau = 2 cos(phi) - 2 a sin(phi)
    const double half_tau = std::cos(phi) - a * std::sin(phi);
    double rho = 1.0;
    if (std::abs(half_tau) > 1.0)
      rho = std::abs(half_tau) + std::sqrt(half_tau * half_tau - 1.0);
    const double raw = std::log(rho) / dt;
    curve[i].k = k;
    curve[i].rate_raw = raw;
    // Long-wave modulational band: the map is unstable there even as dt -> 0.
    // The k^2 guard keeps the mask off the aliased phi = 0 mod 2pi replicas of
    // the spectral method at high k, which are numerical.
    const bool modulational = (beta < 0.0) && (std::abs(phi) < mi_half_width) &&
                              (k * k * std::abs(beta) <= 4.0 * A * A);
    curve[i].rate = modulational ? 0.0 : raw;
  }
  return curve;
}

}  // namespace sslab

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sslab/banded.hpp"
#include "sslab/linear_theory.hpp"

namespace sslab {

// Two-component eigenproblem for the slow envelope of near-k_max
// perturbations riding the rescaled soliton background,
//   (d^2/dX^2 + D - 2V) phi - V sigma1 phi = i Lambda sigma3 phi,
//   V(X) = V_amplitude sech^2(eps X),
// discretized with Numerov weights on the M-1 nodes of the periodic X-domain
// and posed as the pencil G f = mu H f with mu = i(Lambda - Lambda0). The
// shift Lambda0 moves the window that shift-and-invert resolves: eigenvalues
// nearest Lambda0 come out first.
struct EigenProblem {
  double dX = 0.1;
  int M = 0;  // ring node count; system dimension is 2(M-1)
  double D = 0.0;
  cxd shift_Lambda0{0.0, 0.0};
  double X_half = 0.0;   // M * dX / 2
  double epsilon = 0.0;  // dx / 2 of the underlying physical grid
  double V_amplitude = 0.0;
  double x_scale = 0.0;  // physical x per unit X
  std::vector<double> nodes_X;           // X_m = (m - M/2) dX, m = 1..M-1
  std::vector<double> potential_values;  // V_amplitude * sech^2(eps X_m)

  int dim() const { return 2 * (M - 1); }

  // Problem for the rescaling p (D, V_amplitude, domain width all from p).
  static EigenProblem make(const RescaledParams& p, double dX = 0.1, cxd shift = cxd{0.0, 0.0});
};

struct AssembledPencil {
  BandedMatrix G;
  BandedMatrix H;
};

// Numerov assembly: G = sigma3 [A/dX^2 + D N - N Vhat - i Lambda0 sigma3 N],
// H = N, with A the periodic second-difference matrix and N the periodic
// Numerov weight matrix (diagonal 10/12, neighbors and wrap corners 1/12).
// Components are interleaved node-by-node, so the band is kl = ku = 3 and the
// wrap terms land in the corner lists.
AssembledPencil assemble_numerov(const EigenProblem& problem);

struct EigenPair {
  cxd Lambda{0.0, 0.0};
  std::vector<cxd> mode;  // interleaved (phi1_m, phi2_m), unit Euclidean norm
  double residual = 0.0;  // ||G f - mu H f|| at ||f|| = 1
  bool converged = false;
  double localization = 0.0;  // best norm fraction in a window of 10% of the domain
  double peak_X = 0.0;
  bool is_real = false;
  bool outside_core = false;  // |eps * peak_X| >= 1: beyond one soliton width
};

struct EigenReport {
  EigenProblem problem;
  std::vector<EigenPair> pairs;  // sorted by descending Re Lambda
  std::optional<std::size_t> dominant;
  bool all_converged = true;
};

inline constexpr double kTolRealLambda = 1e-10;
inline constexpr double kLocalizedThreshold = 0.45;
inline constexpr double kEigenResidualTol = 1e-9;

// The `count` eigenpairs with mu = i(Lambda - Lambda0) nearest zero, via
// shift-and-invert subspace iteration on the banded factorization with
// Rayleigh-Ritz extraction from the projected pencil. Pairs that miss the
// residual bound keep converged = false and clear report.all_converged.
// Throws only if the factorization itself fails (shift hits an eigenvalue).
EigenReport solve_smallest(const EigenProblem& problem, int count = 24);

// Fills localization, peak_X, is_real, outside_core; dominant = greatest
// Re Lambda among converged pairs that are real and localized.
void classify_modes(EigenReport& report);

struct SymmetryCheck {
  bool passed = true;
  bool inconclusive = false;  // some partner falls outside the solved window
  double worst_rel = 0.0;
  std::string detail;
};

// Confirms the spectrum window closes under Lambda -> -Lambda, conj(Lambda),
// -conj(Lambda) within rel_tol. Only a Lambda0 = 0 window is symmetric, so
// any other shift reports inconclusive.
SymmetryCheck symmetry_check(const EigenReport& report, double rel_tol = 1e-8);

// Growth rate per unit physical time from the dominant pair:
// lambda = Re(Lambda) * A^2 / (C beta^2).
std::optional<double> growth_rate_physical(const EigenReport& report, const RescaledParams& p);

// Dominant-branch search. For D >~ 0.05 the largest real eigenvalue is no
// longer among those nearest the origin, so a Lambda0 = 0 window misses it:
// scan a ladder of real shifts proportional to D, then hill-climb
// (Lambda0 <- 1.2 * best Re Lambda) until the best stops improving, and
// return a full window centered on the winner.
EigenReport solve_dominant(const RescaledParams& p, double dX = 0.1, int count = 24);

// Full spectrum by dense QZ, sorted by ascending |Lambda - Lambda0|;
// test oracle for small problems.
std::vector<cxd> dense_spectrum(const EigenProblem& problem);

// One component (0 or 1) of an interleaved mode vector.
std::vector<cxd> mode_component(const EigenPair& pair, int component);

// Physical-grid field built from a ring mode: envelope phi1 + conj(phi2)
// sampled at each physical node's ring coordinate (exact node hit when the
// lattices are commensurate, linear interpolation otherwise), modulated back
// to k_max by (-1)^(m - N/2) and scaled to the requested peak amplitude.
ComplexField mode_seed_field(const EigenPair& pair, const EigenProblem& problem, GridPtr grid,
                             double peak_amplitude);

}  // namespace sslab

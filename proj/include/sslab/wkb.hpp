#pragma once

#include <optional>
#include <vector>

#include "sslab/linear_theory.hpp"

namespace sslab {

// Semiclassical (WKB) quantization of the localized envelope modes trapped by
// the potential well nu V(eps X), V = V_amplitude sech^2. The continuous index
// n(D) counts the trapped modes; integer crossings mark mode births.

enum class WkbMethod { action_integral, closed_form };

// Outer classical turning point D = nu V(eps X) on [0, X_half].
struct TurningPoint {
  double X_exact = 0.0;  // root with the full sech^2 potential (bisection)
  double X_exp = 0.0;    // root with the tail form V ~ 8 C beta^2 e^{-2 eps |X|}:
                         //   X = ln(8 nu C beta^2 / D) / (2 eps)
};

// nullopt when D is outside (0, nu V_amplitude] or the root falls outside the
// domain, i.e. no turning point exists.
std::optional<TurningPoint> turning_point(double D, double nu, const RescaledParams& params);

// Continuous index from the action integral
//   2 * int_{X_r}^{X_half} sqrt(D - nu V) dX = pi (n + 1/2),
// evaluated with the exact sech^2 potential and with its exponential tail
// (each from its own turning point). Throws when no turning point exists or
// the integration domain is empty.
struct QuantizationIndex {
  double n_sech = 0.0;
  double n_exp = 0.0;
};
QuantizationIndex n_of_D_integral(double D, double nu, const RescaledParams& params);

// Closed form of the exponential-tail action:
//   n = sqrt(D) [2 eps X_half - ln(8 nu C beta^2 / D) - 2(1 - ln 2)] / (eps pi) - 1/2.
// Throws when the bracket is nonpositive (domain too small for the tail form).
double n_of_D_closed_form(double D, double nu, const RescaledParams& params);

struct WkbQuantization {
  double D = 0.0;
  double nu = 0.0;
  double n_continuous = 0.0;
  double X_turning = 0.0;
  WkbMethod method = WkbMethod::action_integral;
};
WkbQuantization quantize(double D, double nu, const RescaledParams& params,
                         WkbMethod method = WkbMethod::action_integral);

// D at which mode n is born, i.e. n(D) crosses the integer n (monotone in D;
// solved by bisection).
double predict_birth_value(int n, double nu, const RescaledParams& params,
                           WkbMethod method = WkbMethod::action_integral);
std::vector<double> predict_birth_values(const std::vector<int>& n_values, double nu,
                                         const RescaledParams& params,
                                         WkbMethod method = WkbMethod::action_integral);

// First D where the nu=1 and nu=3 indices differ by more than one, so a nu=1
// mode birth stops being accompanied by a nu=3 birth. The corresponding C is
// a candidate change-point of the instability pattern extrapolated from the
// index count alone -- a hypothesis, not a measured boundary.
struct CcrHypothesis {
  double D_low = 0.0;    // bisection bracket around the crossing
  double D_high = 0.0;
  double D_crossing = 0.0;
  double C_cr = 0.0;
  bool hypothesis = true;
};
CcrHypothesis hypothesize_C_cr(const RescaledParams& params,
                               WkbMethod method = WkbMethod::action_integral);

}  // namespace sslab

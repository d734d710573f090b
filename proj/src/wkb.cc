#include "sslab/wkb.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace sslab {

namespace {

// Gauss 7 / Kronrod 15 rule on [-1, 1]; the embedded Gauss value supplies the
// error estimate.
constexpr double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                            0.741531185599394, 0.586087235467691, 0.405845151377397,
                            0.207784955007898, 0.0};
constexpr double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                            0.140653259715525, 0.169004726639267, 0.190350578064785,
                            0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469};

struct GkEstimate {
  double value = 0.0;
  double error = 0.0;
};

GkEstimate gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double resk = kWgk[7] * f(c);
  double resg = kWg[3] * f(c);
  for (int i = 0; i < 7; ++i) {
    const double fa = f(c - h * kXgk[i]);
    const double fb = f(c + h * kXgk[i]);
    resk += kWgk[i] * (fa + fb);
    if (i % 2 == 1) resg += kWg[i / 2] * (fa + fb);
  }
  return {resk * h, std::abs((resk - resg) * h)};
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                          int depth = 0) {
  const GkEstimate est = gk15(f, a, b);
  if (est.error <= tol || depth >= 40) return est.value;
  const double m = 0.5 * (a + b);
  return integrate_adaptive(f, a, m, 0.5 * tol, depth + 1) +
         integrate_adaptive(f, m, b, 0.5 * tol, depth + 1);
}

double sech2(double z) {
  const double az = std::abs(z);
  if (az > 350.0) return 0.0;
  const double s = 1.0 / std::cosh(az);
  return s * s;
}

// Action integral from turning point X_r to X_half with the sqrt singularity
// absorbed by X = X_r + (X_half - X_r) t^2.
double half_action(double D, double nu, const RescaledParams& p, double X_r, bool exponential) {
  const double X_half = p.X_half();
  if (!(X_r < X_half)) throw std::domain_error("wkb action: turning point outside the domain");
  const double span = X_half - X_r;
  const double c_beta2 = p.ratio_C * p.beta * p.beta;
  auto integrand = [&](double t) {
    const double X = X_r + span * t * t;
    const double V = exponential ? 8.0 * c_beta2 * std::exp(-2.0 * p.epsilon * std::abs(X))
                                 : p.V_amplitude * sech2(p.epsilon * X);
    const double arg = D - nu * V;
    return (arg > 0.0 ? std::sqrt(arg) : 0.0) * 2.0 * span * t;
  };
  return integrate_adaptive(integrand, 0.0, 1.0, 1e-10);
}

double index_from_action(double half_integral) { return 2.0 * half_integral / M_PI - 0.5; }

double index_of(double D, double nu, const RescaledParams& p, WkbMethod method) {
  if (method == WkbMethod::closed_form) return n_of_D_closed_form(D, nu, p);
  return n_of_D_integral(D, nu, p).n_sech;
}

}  // namespace

std::optional<TurningPoint> turning_point(double D, double nu, const RescaledParams& params) {
  const double well_depth = nu * params.V_amplitude;
  if (!(D > 0.0) || D > well_depth) return std::nullopt;

  const double X_half = params.X_half();
  TurningPoint tp;
  const double c_beta2 = params.ratio_C * params.beta * params.beta;
  tp.X_exp = std::log(8.0 * nu * c_beta2 / D) / (2.0 * params.epsilon);

  auto f = [&](double X) { return D - well_depth * sech2(params.epsilon * X); };
  if (f(X_half) <= 0.0) return std::nullopt;  // domain ends inside the well
  double lo = 0.0;
  double hi = X_half;
  if (f(lo) >= 0.0) {  // D at the well top: root at the origin
    tp.X_exact = 0.0;
    return tp;
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  tp.X_exact = 0.5 * (lo + hi);
  return tp;
}

QuantizationIndex n_of_D_integral(double D, double nu, const RescaledParams& params) {
  const auto tp = turning_point(D, nu, params);
  if (!tp) throw std::domain_error("n_of_D_integral: no classical turning point for this D");
  QuantizationIndex out;
  out.n_sech = index_from_action(half_action(D, nu, params, tp->X_exact, false));
  out.n_exp = index_from_action(half_action(D, nu, params, tp->X_exp, true));
  return out;
}

double n_of_D_closed_form(double D, double nu, const RescaledParams& params) {
  if (!(D > 0.0)) throw std::domain_error("n_of_D_closed_form: requires D > 0");
  const double c_beta2 = params.ratio_C * params.beta * params.beta;
  const double bracket = 2.0 * params.epsilon * params.X_half() -
                         std::log(8.0 * nu * c_beta2 / D) - 2.0 * (1.0 - std::log(2.0));
  if (bracket <= 0.0)
    throw std::domain_error("n_of_D_closed_form: domain too small (nonpositive bracket)");
  return std::sqrt(D) * bracket / (params.epsilon * M_PI) - 0.5;
}

WkbQuantization quantize(double D, double nu, const RescaledParams& params, WkbMethod method) {
  WkbQuantization q;
  q.D = D;
  q.nu = nu;
  q.method = method;
  q.n_continuous = index_of(D, nu, params, method);
  const auto tp = turning_point(D, nu, params);
  if (tp) q.X_turning = (method == WkbMethod::closed_form) ? tp->X_exp : tp->X_exact;
  return q;
}

double predict_birth_value(int n, double nu, const RescaledParams& params, WkbMethod method) {
  const double target = static_cast<double>(n);
  double lo = 1e-9;
  if (index_of(lo, nu, params, method) >= target)
    throw std::domain_error("predict_birth_value: mode already present at the lower bracket");
  const double cap = 0.999 * nu * params.V_amplitude;
  double hi = std::min(0.05, cap);
  while (index_of(hi, nu, params, method) < target) {
    if (hi >= cap) throw std::domain_error("predict_birth_value: index never reaches n");
    hi = std::min(2.0 * hi, cap);
  }
  for (int it = 0; it < 120 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    (index_of(mid, nu, params, method) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> predict_birth_values(const std::vector<int>& n_values, double nu,
                                         const RescaledParams& params, WkbMethod method) {
  std::vector<double> out;
  out.reserve(n_values.size());
  for (int n : n_values) out.push_back(predict_birth_value(n, nu, params, method));
  return out;
}

CcrHypothesis hypothesize_C_cr(const RescaledParams& params, WkbMethod method) {
  auto gap_minus_one = [&](double D) {
    return index_of(D, 1.0, params, method) - index_of(D, 3.0, params, method) - 1.0;
  };
  // The tail form gives gap = sqrt(D) ln 3 / (eps pi); scan around its root.
  const double guess = std::pow(params.epsilon * M_PI / std::log(3.0), 2);
  const int n_scan = 256;
  double lo = guess / 8.0;
  const double hi_end = 8.0 * guess;
  if (gap_minus_one(lo) >= 0.0) throw std::runtime_error("hypothesize_C_cr: crossing below scan range");
  double hi = 0.0;
  bool found = false;
  for (int i = 1; i <= n_scan; ++i) {
    const double D = guess / 8.0 + (hi_end - guess / 8.0) * i / n_scan;
    if (gap_minus_one(D) >= 0.0) {
      hi = D;
      found = true;
      break;
    }
    lo = D;
  }
  if (!found) throw std::runtime_error("hypothesize_C_cr: no crossing in scan range");
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (gap_minus_one(mid) < 0.0 ? lo : hi) = mid;
  }

  CcrHypothesis out;
  out.D_low = lo;
  out.D_high = hi;
  out.D_crossing = 0.5 * (lo + hi);
  out.C_cr = (out.D_crossing - params.beta / (params.amplitude_A * params.amplitude_A)) /
             (params.beta * params.beta);
  out.hypothesis = true;
  return out;
}

}  // namespace sslab

#pragma once

#include <optional>

#include "sslab/simulation.hpp"

namespace sslab {

struct SpectrumSnapshot {
  double time = 0.0;
  std::vector<double> magnitudes;  // |F[u]|(k) over the grid's DFT lattice
};

SpectrumSnapshot spectrum(const Snapshot& snap);

// Wavenumber band selected by absolute value: abs_k_min <= |k| <= abs_k_max.
struct KBand {
  double abs_k_min = 0.0;
  double abs_k_max = 1e300;
};

// Band |k| >= frac * k_max (the default measurement band uses frac = 0.9).
KBand high_k_band(const Grid1D& grid, double frac = 0.9);

// max_{k in band} |F[u]|(k)
double band_spectrum_max(const ComplexField& u, const KBand& band);

struct GrowthRateEstimate {
  double rate = 0.0;  // Re lambda
  KBand k_window;
  double t_measure = 0.0;
  double noise_floor = 0.0;  // band maximum of the t = 0 spectrum
};

// rate = [ln(max band magnitude at t) - ln(band magnitude at t=0)] / t,
// using the snapshots closest to 0 and t. Throws if the t=0 band is zero
// (nothing seeded).
GrowthRateEstimate growth_rate(const SimulationRun& run, const KBand& band, double t);

// Same ratio estimator between two interior times; local slope, free of the
// t=0 floor offset.
GrowthRateEstimate growth_rate_window(const SimulationRun& run, const KBand& band, double t1,
                                      double t2);

enum class Side { left, right };

struct ModeProfile {
  bool found = false;
  ComplexField envelope;  // slow envelope after factoring the e^{i k_max x} carrier
  double peak_position_x = 0.0;
  Side side = Side::right;
  double left_peak_x = 0.0, left_amp = 0.0;
  double right_peak_x = 0.0, right_amp = 0.0;
};

// Zero all |k| < cutoff_fraction * k_max, demodulate with e^{-i k_max x}
// ((-1)^(m - N/2) on the grid), and locate the envelope peak on each side of
// the domain center. found == false when the high-k band is empty (below
// 1e-14 of the field norm).
ModeProfile extract_unstable_mode(const ComplexField& field, double cutoff_fraction = 0.5);

// Low-pass part of a field: Fourier content with |k| <= cutoff_fraction*k_max.
ComplexField low_pass(const ComplexField& field, double cutoff_fraction);

struct DriftTrack {
  std::vector<double> times;
  std::vector<double> centers;
  std::optional<double> onset_time;  // first |center - center0| > one soliton width
  double late_velocity = 0.0;        // linear fit over the last quarter of the track
  bool truncated = false;            // soliton peak fell below half its initial value
};

// Soliton center per snapshot: argmax of the low-pass filtered |u| refined by
// a parabolic fit, tracked until the peak decays below half its initial value.
DriftTrack track_drift(const SimulationRun& run);

struct RescaledParams;

// Measurement band for the k_max-adjacent unstable modes. Their offsets from
// k_max scale as sqrt(D)/eps, so the band reaches a cushion of
// min(max(2.5 sqrt(D)/eps, 0.1 k_max), 0.5 k_max) below k_max.
KBand unstable_mode_band(const RescaledParams& params, const Grid1D& grid);

}  // namespace sslab

#include "sslab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sslab/fft.hpp"
#include "sslab/linear_theory.hpp"

namespace sslab {

SpectrumSnapshot spectrum(const Snapshot& snap) {
  SpectrumSnapshot out;
  out.time = snap.t;
  std::vector<cxd> v = snap.u.v;
  dft_inplace(v);
  out.magnitudes.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.magnitudes[i] = std::abs(v[i]);
  return out;
}

KBand high_k_band(const Grid1D& grid, double frac) { return {frac * grid.k_max(), 1e300}; }

double band_spectrum_max(const ComplexField& u, const KBand& band) {
  std::vector<cxd> v = u.v;
  dft_inplace(v);
  double best = 0.0;
  for (int j = 0; j < u.grid->n_points; ++j) {
    const double ak = std::abs(u.grid->wavenumbers[j]);
    if (ak >= band.abs_k_min && ak <= band.abs_k_max) best = std::max(best, std::abs(v[j]));
  }
  return best;
}

GrowthRateEstimate growth_rate_window(const SimulationRun& run, const KBand& band, double t1,
                                      double t2) {
  const Snapshot& s1 = run.at_time(t1);
  const Snapshot& s2 = run.at_time(t2);
  if (s2.t <= s1.t) throw std::invalid_argument("growth_rate: need t2 > t1 snapshots");
  const double m1 = band_spectrum_max(s1.u, band);
  const double m2 = band_spectrum_max(s2.u, band);
  if (m1 <= 0.0)
    throw std::runtime_error("growth_rate: band magnitude at the start time is zero; seed noise");
  GrowthRateEstimate est;
  est.rate = (std::log(m2) - std::log(m1)) / (s2.t - s1.t);
  est.k_window = band;
  est.t_measure = s2.t;
  est.noise_floor = m1;
  return est;
}

GrowthRateEstimate growth_rate(const SimulationRun& run, const KBand& band, double t) {
  return growth_rate_window(run, band, 0.0, t);
}

namespace {

// parabolic refinement of an argmax on a periodic array of samples
double refine_peak(const std::vector<double>& vals, int j, const Grid1D& grid) {
  const int n = static_cast<int>(vals.size());
  const double ym = vals[(j + n - 1) % n], y0 = vals[j], yp = vals[(j + 1) % n];
  const double den = ym - 2.0 * y0 + yp;
  double off = 0.0;
  if (den != 0.0) off = 0.5 * (ym - yp) / den;
  if (std::abs(off) > 1.0) off = 0.0;  // degenerate fit; keep the grid point
  return grid.points[j] + off * grid.mesh_dx;
}

}  // namespace

ComplexField low_pass(const ComplexField& field, double cutoff_fraction) {
  const double kcut = cutoff_fraction * field.grid->k_max();
  ComplexField out = field;
  dft_inplace(out.v);
  for (int j = 0; j < field.grid->n_points; ++j)
    if (std::abs(field.grid->wavenumbers[j]) > kcut) out.v[j] = cxd{0.0, 0.0};
  idft_inplace(out.v);
  return out;
}

ModeProfile extract_unstable_mode(const ComplexField& field, double cutoff_fraction) {
  const int n = field.grid->n_points;
  const double kcut = cutoff_fraction * field.grid->k_max();
  ComplexField hp = field;
  dft_inplace(hp.v);
  for (int j = 0; j < n; ++j)
    if (std::abs(field.grid->wavenumbers[j]) < kcut) hp.v[j] = cxd{0.0, 0.0};
  idft_inplace(hp.v);

  ModeProfile mode;
  if (norm_samples(hp) < 1e-14 * std::max(norm_samples(field), 1e-300)) return mode;
  mode.found = true;

  // e^{-i k_max x_m} = (-1)^(m - N/2) on the lattice
  mode.envelope = ComplexField(field.grid);
  for (int m = 0; m < n; ++m) {
    const double sign = ((m - n / 2) % 2 == 0) ? 1.0 : -1.0;
    mode.envelope.v[m] = hp.v[m] * sign;
  }

  std::vector<double> mag(n);
  for (int m = 0; m < n; ++m) mag[m] = std::abs(mode.envelope.v[m]);
  int jl = 0, jr = n / 2;
  for (int m = 0; m < n / 2; ++m)
    if (mag[m] > mag[jl]) jl = m;
  for (int m = n / 2; m < n; ++m)
    if (mag[m] > mag[jr]) jr = m;
  mode.left_peak_x = refine_peak(mag, jl, *field.grid);
  mode.left_amp = mag[jl];
  mode.right_peak_x = refine_peak(mag, jr, *field.grid);
  mode.right_amp = mag[jr];
  if (mag[jl] >= mag[jr]) {
    mode.side = Side::left;
    mode.peak_position_x = mode.left_peak_x;
  } else {
    mode.side = Side::right;
    mode.peak_position_x = mode.right_peak_x;
  }
  return mode;
}

DriftTrack track_drift(const SimulationRun& run) {
  if (run.snapshots.empty()) throw std::invalid_argument("track_drift: empty run");
  const Grid1D& grid = *run.snapshots.front().u.grid;
  const int n = grid.n_points;
  const double L = grid.length_L;
  const double width = std::sqrt(-run.config.beta) / run.config.amplitude_A;

  DriftTrack track;
  double peak0 = 0.0;
  double prev_center = 0.0;   // unwrapped
  bool first = true;

  for (const Snapshot& snap : run.snapshots) {
    ComplexField mag(snap.u.grid);
    for (int m = 0; m < n; ++m) mag.v[m] = cxd{std::abs(snap.u.v[m]), 0.0};
    ComplexField lp = low_pass(mag, 0.1);
    std::vector<double> vals(n);
    for (int m = 0; m < n; ++m) vals[m] = lp.v[m].real();
    int j = 0;
    for (int m = 1; m < n; ++m)
      if (vals[m] > vals[j]) j = m;

    const double peak = max_abs(snap.u);
    if (first) peak0 = peak;
    if (!first && peak < 0.5 * peak0) {
      track.truncated = true;
      break;
    }

    const double c_raw = refine_peak(vals, j, grid);
    double c;
    if (first) {
      c = c_raw;
    } else {
      // unwrap across the periodic boundary: take the image nearest the last center
      c = prev_center + std::remainder(c_raw - prev_center, L);
    }
    track.times.push_back(snap.t);
    track.centers.push_back(c);
    if (!track.onset_time && !first && std::abs(c - track.centers.front()) > width)
      track.onset_time = snap.t;
    prev_center = c;
    first = false;
  }

  // late-time velocity: least-squares slope over the last quarter of the track
  const std::size_t npts = track.times.size();
  if (npts >= 2) {
    std::size_t i0 = (npts * 3) / 4;
    if (npts - i0 < 2) i0 = npts - 2;
    double st = 0, sc = 0, stt = 0, stc = 0;
    const double nfit = static_cast<double>(npts - i0);
    for (std::size_t i = i0; i < npts; ++i) {
      st += track.times[i];
      sc += track.centers[i];
      stt += track.times[i] * track.times[i];
      stc += track.times[i] * track.centers[i];
    }
    const double den = nfit * stt - st * st;
    track.late_velocity = den != 0.0 ? (nfit * stc - st * sc) / den : 0.0;
  }
  return track;
}

KBand unstable_mode_band(const RescaledParams& params, const Grid1D& grid) {
  const double k_max = grid.k_max();
  const double offset_scale =
      params.D > 0.0 ? 2.5 * std::sqrt(params.D) / params.epsilon : 0.0;
  const double cushion = std::min(std::max(offset_scale, 0.1 * k_max), 0.5 * k_max);
  return KBand{k_max - cushion, 1e300};
}

}  // namespace sslab

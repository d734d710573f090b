#include <doctest.h>

#include <cmath>

#include "sslab/diagnostics.hpp"
#include "sslab/initial_conditions.hpp"
#include "sslab/linear_theory.hpp"

using namespace sslab;

namespace {

// carrier at the grid cutoff: e^{i k_max x_m} = (-1)^(m - N/2)
double carrier(int m, int n) { return ((m - n / 2) % 2 == 0) ? 1.0 : -1.0; }

ComplexField soliton_plus_mode(const GridPtr& g, double mode_amp) {
  ComplexField u = make_soliton(g, 1.0, -1.0, 2.0);
  for (int m = 0; m < u.size(); ++m) u.v[m] += mode_amp * carrier(m, u.size());
  return u;
}

// seed well above the soliton's boundary-truncation spectral floor (~3e-10)
SimulationRun synthetic_run(const GridPtr& g, double rate, double t_step, int n_snaps) {
  SimulationRun run;
  for (int i = 0; i < n_snaps; ++i) {
    const double t = i * t_step;
    run.snapshots.push_back({t, soliton_plus_mode(g, 1e-6 * std::exp(rate * t))});
  }
  return run;
}

}  // namespace

TEST_CASE("spectrum magnitudes of a single Fourier mode") {
  auto g = Grid1D::make(40.0, 64);
  ComplexField u(g);
  const int j = 5;
  for (int m = 0; m < 64; ++m) {
    const double ph = g->wavenumbers[j] * g->points[m];
    u.v[m] = 0.25 * cxd{std::cos(ph), std::sin(ph)};
  }
  const SpectrumSnapshot s = spectrum({1.5, u});
  CHECK(s.time == 1.5);
  for (int i = 0; i < 64; ++i) {
    if (i == j)
      CHECK(s.magnitudes[i] == doctest::Approx(0.25 * 64).epsilon(1e-12));
    else
      CHECK(s.magnitudes[i] < 1e-11);
  }
}

TEST_CASE("band selection and band maxima") {
  auto g = Grid1D::make(40.0, 128);
  const KBand band = high_k_band(*g, 0.9);
  CHECK(band.abs_k_min == doctest::Approx(0.9 * g->k_max()).epsilon(1e-14));

  ComplexField u(g);
  for (int m = 0; m < 128; ++m) {
    const double low = g->wavenumbers[2] * g->points[m];
    u.v[m] = 5.0 * cxd{std::cos(low), std::sin(low)} + 0.1 * carrier(m, 128);
  }
  CHECK(band_spectrum_max(u, band) == doctest::Approx(0.1 * 128).epsilon(1e-10));
  CHECK(band_spectrum_max(u, KBand{0.0, 1e300}) == doctest::Approx(5.0 * 128).epsilon(1e-10));
}

TEST_CASE("growth rate estimator on a synthetic exponential") {
  auto g = Grid1D::make(40.0, 256);
  const SimulationRun run = synthetic_run(g, 0.02, 100.0, 11);  // t = 0..1000
  const KBand band = high_k_band(*g);

  const GrowthRateEstimate est = growth_rate(run, band, 1000.0);
  CHECK(est.rate == doctest::Approx(0.02).epsilon(1e-6));
  CHECK(est.t_measure == 1000.0);
  CHECK(est.noise_floor == doctest::Approx(1e-6 * 256).epsilon(1e-4));

  const GrowthRateEstimate win = growth_rate_window(run, band, 300.0, 800.0);
  CHECK(win.rate == doctest::Approx(0.02).epsilon(1e-6));

  SUBCASE("window slope ignores a distorted start snapshot") {
    SimulationRun biased = run;
    for (auto& v : biased.snapshots[0].u.v) v *= 50.0;  // fake floor offset at t=0
    CHECK(growth_rate(biased, band, 1000.0).rate < 0.02 - 1e-4);
    CHECK(growth_rate_window(biased, band, 300.0, 800.0).rate ==
          doctest::Approx(0.02).epsilon(1e-6));
  }

  SUBCASE("unseeded band throws") {
    SimulationRun zero;
    ComplexField z(g);
    zero.snapshots.push_back({0.0, z});
    zero.snapshots.push_back({10.0, z});
    CHECK_THROWS_AS((void)growth_rate(zero, band, 10.0), std::runtime_error);
    CHECK_THROWS_AS((void)growth_rate_window(run, band, 800.0, 300.0), std::invalid_argument);
  }
}

TEST_CASE("unstable-mode extraction: demodulated envelope and side peaks") {
  auto g = Grid1D::make(40.0, 512);
  const int n = 512;
  auto gauss = [](double x, double c) { return std::exp(-0.5 * (x - c) * (x - c)); };

  ComplexField u = make_soliton(g, 1.0, -1.0, 2.0);
  std::vector<double> env(n);
  for (int m = 0; m < n; ++m) {
    const double x = g->points[m];
    env[m] = 1e-5 * gauss(x, 7.0) + 0.5e-5 * gauss(x, -7.0);
    u.v[m] += env[m] * carrier(m, n);
  }

  const ModeProfile mode = extract_unstable_mode(u);
  REQUIRE(mode.found);
  CHECK(mode.side == Side::right);
  CHECK(mode.peak_position_x == doctest::Approx(7.0).epsilon(0.01));
  CHECK(mode.right_amp == doctest::Approx(1e-5).epsilon(0.01));
  CHECK(mode.left_peak_x == doctest::Approx(-7.0).epsilon(0.01));
  CHECK(mode.left_amp == doctest::Approx(0.5e-5).epsilon(0.01));
  // soliton tail leaking through the 0.5 k_max cutoff bounds the recovery
  for (int m = 0; m < n; ++m) CHECK(std::abs(mode.envelope.v[m] - env[m]) < 1e-9);

  const ModeProfile none = extract_unstable_mode(ComplexField(g));
  CHECK(!none.found);
}

TEST_CASE("low-pass filter keeps only the slow content") {
  auto g = Grid1D::make(40.0, 128);
  ComplexField u(g);
  for (int m = 0; m < 128; ++m) {
    const double low = g->wavenumbers[3] * g->points[m];
    u.v[m] = cxd{std::cos(low), std::sin(low)} + 0.2 * carrier(m, 128);
  }
  const ComplexField lp = low_pass(u, 0.5);
  for (int m = 0; m < 128; ++m) {
    const double low = g->wavenumbers[3] * g->points[m];
    CHECK(std::abs(lp.v[m] - cxd{std::cos(low), std::sin(low)}) < 1e-12);
  }
}

TEST_CASE("drift tracking on a synthetic moving soliton") {
  auto g = Grid1D::make(40.0, 512);
  const int n = 512;
  auto moving_run = [&](double v, double t_end, double cadence, double amp_late) {
    SimulationRun run;
    run.config.beta = -1.0;
    run.config.amplitude_A = 1.0;
    for (double t = 0.0; t <= t_end + 1e-9; t += cadence) {
      ComplexField u(g);
      const double amp = (t > 500.0) ? amp_late : 1.0;
      for (int m = 0; m < n; ++m) {
        const double d = std::remainder(g->points[m] - v * t, 40.0);
        u.v[m] = amp / std::cosh(d);
      }
      run.snapshots.push_back({t, u});
    }
    return run;
  };

  SUBCASE("steady drift: onset at one width, fitted late velocity") {
    const DriftTrack track = track_drift(moving_run(0.01, 1000.0, 10.0, 1.0));
    CHECK(!track.truncated);
    REQUIRE(track.onset_time.has_value());
    CHECK(*track.onset_time >= 90.0);
    CHECK(*track.onset_time <= 120.0);
    CHECK(track.late_velocity == doctest::Approx(0.01).epsilon(1e-3));
    CHECK(track.centers.back() == doctest::Approx(10.0).epsilon(1e-2));
  }

  SUBCASE("center unwraps across the periodic boundary") {
    const DriftTrack track = track_drift(moving_run(0.05, 500.0, 10.0, 1.0));
    CHECK(track.centers.back() == doctest::Approx(25.0).epsilon(1e-2));  // past x = L/2
  }

  SUBCASE("static soliton never crosses the onset") {
    const DriftTrack track = track_drift(moving_run(0.0, 500.0, 50.0, 1.0));
    CHECK(!track.onset_time.has_value());
    CHECK(std::abs(track.late_velocity) < 1e-10);
  }

  SUBCASE("peak decay truncates the track") {
    const DriftTrack track = track_drift(moving_run(0.01, 1000.0, 10.0, 0.4));
    CHECK(track.truncated);
    CHECK(track.times.back() <= 500.0);
  }
}

TEST_CASE("measurement band for the cutoff-adjacent modes") {
  auto g = Grid1D::make(40.0, 512);
  const double k_max = g->k_max();

  const RescaledParams mid = rescale_for_D(0.05, -1.0, 1.0, 40.0, 512);
  const double expect = 2.5 * std::sqrt(0.05) / mid.epsilon;
  CHECK(unstable_mode_band(mid, *g).abs_k_min == doctest::Approx(k_max - expect).epsilon(1e-12));

  const RescaledParams tiny = rescale_for_D(1e-6, -1.0, 1.0, 40.0, 512);
  CHECK(unstable_mode_band(tiny, *g).abs_k_min == doctest::Approx(0.9 * k_max).epsilon(1e-12));

  const RescaledParams wide = rescale_for_D(5.0, -1.0, 1.0, 40.0, 512);
  CHECK(unstable_mode_band(wide, *g).abs_k_min == doctest::Approx(0.5 * k_max).epsilon(1e-12));
}

#include "sslab/simulation.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "sslab/fft.hpp"
#include "sslab/initial_conditions.hpp"
#include "sslab/kernels.hpp"

namespace sslab {

void SimConfig::finalize() {
  if (gamma <= 0.0) throw std::domain_error("SimConfig: gamma must be > 0");
  const double dx = mesh_dx();
  if (dt <= 0.0 && ratio_C <= 0.0)
    throw std::domain_error("SimConfig: one of dt / ratio_C must be set");
  if (dt <= 0.0) dt = std::sqrt(ratio_C) * dx;
  if (ratio_C <= 0.0) ratio_C = (dt / dx) * (dt / dx);
  const double c_check = (dt / dx) * (dt / dx);
  if (std::abs(c_check - ratio_C) > 1e-9 * std::max(1.0, ratio_C))
    throw std::domain_error("SimConfig: dt and ratio_C are inconsistent, (dt/dx)^2 != C");
}

GridPtr SimConfig::make_grid() const { return Grid1D::make(length_L, n_points); }

const Snapshot& SimulationRun::at_time(double t) const {
  if (snapshots.empty()) throw std::runtime_error("SimulationRun: no snapshots");
  const Snapshot* best = &snapshots.front();
  for (const auto& s : snapshots)
    if (std::abs(s.t - t) < std::abs(best->t - t)) best = &s;
  return *best;
}

namespace {

struct SnapshotSchedule {
  double interval;
  double dt;
  long n_steps;
  long next_index = 1;

  bool due(long step) const {
    if (step == n_steps) return true;
    if (interval <= 0.0) return false;
    return step * dt >= next_index * interval - 0.5 * dt;
  }
  void advance(long step) {
    if (interval > 0.0)
      while (next_index * interval <= step * dt + 0.5 * dt) ++next_index;
  }
};

}  // namespace

SimulationRun run_split_step(const SimConfig& config_in, const ComplexField& u0) {
  SimConfig config = config_in;
  config.finalize();
  if (u0.grid->n_points != config.n_points ||
      std::abs(u0.grid->length_L - config.length_L) > 1e-12)
    throw std::invalid_argument("run_split_step: u0 grid does not match config");
  if (config.boundary == Boundary::dirichlet_zero &&
      config.dispersive != DispersiveKind::fd_dirichlet)
    throw std::invalid_argument("run_split_step: dirichlet boundary requires the fd_dirichlet step");

  const auto t_start = std::chrono::steady_clock::now();
  StepOperators ops = StepOperators::make(u0.grid, config.dispersive, config.beta, config.dt);

  SimulationRun run;
  run.config = config;
  const long n_steps = std::llround(config.t_final / config.dt);
  run.snapshots.push_back({0.0, u0});

  const double abort_level = 1e6 * std::max(max_abs(u0), 1e-300);
  ComplexField u = u0;
  SnapshotSchedule sched{config.snapshot_interval, config.dt, n_steps};

  for (long n = 1; n <= n_steps; ++n) {
    // strang: swap sub-step order on every other step
    const bool nonlinear_first =
        (config.splitting == Splitting::first_order) ? true : (n % 2 == 1);
    if (nonlinear_first) {
      kernels::phase_rotate(u.v, config.gamma, config.dt);
      u = dispersive_step(ops, u);
    } else {
      u = dispersive_step(ops, u);
      kernels::phase_rotate(u.v, config.gamma, config.dt);
    }

    const double peak = max_abs(u);
    if (!std::isfinite(peak) || !all_finite(u) || peak > abort_level) {
      run.blew_up = true;
      run.blow_time = n * config.dt;
      run.blow_reason = std::isfinite(peak) && all_finite(u)
                            ? "amplitude exceeded 1e6 x initial maximum"
                            : "non-finite field value";
      break;
    }
    if (sched.due(n)) {
      run.snapshots.push_back({n * config.dt, u});
      sched.advance(n);
    }
  }

  run.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return run;
}

SimulationRun propagate_linearized_error(const SimConfig& config_in, Background background,
                                         const ComplexField& tilde_u0) {
  SimConfig config = config_in;
  config.finalize();
  if (config.boundary != Boundary::periodic)
    throw std::invalid_argument("propagate_linearized_error: periodic boundaries only");
  if (config.dispersive == DispersiveKind::fd_dirichlet)
    throw std::invalid_argument("propagate_linearized_error: spectral or fd_periodic step only");
  if (tilde_u0.grid->n_points != config.n_points)
    throw std::invalid_argument("propagate_linearized_error: field/config grid mismatch");

  const auto t_start = std::chrono::steady_clock::now();
  const GridPtr grid = tilde_u0.grid;
  const int n_pts = grid->n_points;

  ComplexField prof = (background == Background::plane_wave)
                          ? make_plane_wave(grid, config.amplitude_A, config.gamma)
                          : make_soliton(grid, config.amplitude_A, config.beta, config.gamma);
  const double omega = config.amplitude_A * config.amplitude_A;

  std::vector<cxd> u2(n_pts), ph(n_pts);
  std::vector<double> au2(n_pts);
  for (int m = 0; m < n_pts; ++m) {
    u2[m] = prof.v[m] * prof.v[m];
    au2[m] = std::norm(prof.v[m]);
    const double phi = config.gamma * au2[m] * config.dt;
    ph[m] = cxd{std::cos(phi), std::sin(phi)};
  }

  StepOperators ops = StepOperators::make(grid, config.dispersive, config.beta, config.dt);

  SimulationRun run;
  run.config = config;
  const long n_steps = std::llround(config.t_final / config.dt);
  run.snapshots.push_back({0.0, tilde_u0});

  ComplexField u = tilde_u0;
  ComplexField work(grid);
  SnapshotSchedule sched{config.snapshot_interval, config.dt, n_steps};

  for (long n = 1; n <= n_steps; ++n) {
    const double th = 2.0 * omega * (n - 1) * config.dt;  // background phase at step start
    const cxd c2{std::cos(th), std::sin(th)};
    kernels::linearized_nonlinear(work.v, u.v, ph, u2, c2, au2, config.gamma, config.dt);
    dft_inplace(work.v);
    kernels::multiply(work.v, ops.multiplier);
    idft_inplace(work.v);
    std::swap(u.v, work.v);

    if (!all_finite(u)) {
      run.blew_up = true;
      run.blow_time = n * config.dt;
      run.blow_reason = "non-finite field value";
      break;
    }
    if (sched.due(n)) {
      run.snapshots.push_back({n * config.dt, u});
      sched.advance(n);
    }
  }

  run.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return run;
}

}  // namespace sslab

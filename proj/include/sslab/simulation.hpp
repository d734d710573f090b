#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sslab/grid.hpp"
#include "sslab/step_operators.hpp"

namespace sslab {

enum class Boundary { periodic, dirichlet_zero };
enum class Splitting { first_order, strang };
enum class Background { plane_wave, soliton };

struct SimConfig {
  // physics
  double beta = -1.0;
  double gamma = 2.0;
  double amplitude_A = 1.0;
  // discretization
  double length_L = 40.0;
  int n_points = 512;
  double dt = 0.0;       // if 0, derived from ratio_C
  double ratio_C = 0.0;  // (dt/dx)^2; if 0, derived from dt
  DispersiveKind dispersive = DispersiveKind::fd_periodic;
  Boundary boundary = Boundary::periodic;
  Splitting splitting = Splitting::first_order;
  // run control
  double noise_std = 0.0;
  std::uint64_t rng_seed = 0;
  double t_final = 0.0;
  double snapshot_interval = 0.0;  // <= 0: keep only first and last

  double mesh_dx() const { return length_L / n_points; }
  // Fill whichever of dt / ratio_C is unset and check the (dt/dx)^2 invariant.
  void finalize();
  GridPtr make_grid() const;
};

struct Snapshot {
  double t = 0.0;
  ComplexField u;
};

struct SimulationRun {
  SimConfig config;
  std::vector<Snapshot> snapshots;
  double wall_time = 0.0;
  bool blew_up = false;
  double blow_time = 0.0;
  std::string blow_reason;

  const Snapshot& last() const { return snapshots.back(); }
  // Snapshot with time closest to t.
  const Snapshot& at_time(double t) const;
};

// Split-step integration of i u_t - beta u_xx + gamma |u|^2 u = 0 from u0.
// first_order: nonlinear then dispersive each step; strang: the order of the
// two sub-steps alternates between consecutive steps (second order in dt).
// Aborts on non-finite samples or max|u| > 1e6 * max|u0|, keeping the last
// finite snapshot and setting blew_up.
SimulationRun run_split_step(const SimConfig& config, const ComplexField& u0);

// Linearized error recursion about a frozen background profile U(x) carrying
// its exact phase e^{i omega t_n}, omega = A^2:
//   F[u_{n+1}] = e^{iP(k)} F[ e^{i g |U|^2 dt} (u_n + i g dt (U^2 e^{2 i omega t_n} u_n^*
//                                                            + |U|^2 u_n)) ]
// with e^{iP(k)} the dispersive multiplier selected by config.dispersive.
// Exactly linear in tilde_u0. Periodic boundaries only; always the
// first-order sub-step order.
SimulationRun propagate_linearized_error(const SimConfig& config, Background background,
                                         const ComplexField& tilde_u0);

}  // namespace sslab

// sslab: split-step instability laboratory.
//
// Subcommands:
//   simulate    integrate the NLS from a configured initial condition
//   growth      C-scan comparing measured and eigenvalue-predicted rates
//   eigen       localized-mode eigenproblem report for one D (or C)
//   wkb         semiclassical mode-count scan, birth values, C_cr hypothesis
//   thresholds  print the stability thresholds for the configured grid

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sslab/config_file.hpp"
#include "sslab/diagnostics.hpp"
#include "sslab/eigenproblem.hpp"
#include "sslab/initial_conditions.hpp"
#include "sslab/io.hpp"
#include "sslab/kernels.hpp"
#include "sslab/linear_theory.hpp"
#include "sslab/simulation.hpp"
#include "sslab/wkb.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
  std::string config_path;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  int threads = 0;
};

std::string index_name(const char* stem, int idx) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_%03d.csv", stem, idx);
  return buf;
}

struct SimSetup {
  sslab::SimConfig config;
  std::string initial = "soliton";
  double sigma = 1.0;  // gaussian initial condition width
};

SimSetup parse_sim_section(const sslab::ConfigFile& cfg) {
  SimSetup setup;
  sslab::SimConfig& sc = setup.config;
  sc.beta = cfg.get_double("simulation", "beta", sc.beta);
  sc.gamma = cfg.get_double("simulation", "gamma", sc.gamma);
  sc.amplitude_A = cfg.get_double("simulation", "amplitude", sc.amplitude_A);
  sc.length_L = cfg.get_double("simulation", "length", sc.length_L);
  sc.n_points = cfg.get_int("simulation", "n_points", sc.n_points);
  sc.dt = cfg.get_double("simulation", "dt", 0.0);
  sc.ratio_C = cfg.get_double("simulation", "ratio_c", 0.0);
  sc.noise_std = cfg.get_double("simulation", "noise_std", 0.0);
  sc.rng_seed = cfg.get_uint64("simulation", "seed", 0);
  sc.t_final = cfg.get_double("simulation", "t_final", 0.0);
  sc.snapshot_interval = cfg.get_double("simulation", "snapshot_interval", 0.0);

  const std::string disp = cfg.get_string("simulation", "dispersive", "fd_periodic");
  if (disp == "spectral") {
    sc.dispersive = sslab::DispersiveKind::spectral;
  } else if (disp == "fd_periodic") {
    sc.dispersive = sslab::DispersiveKind::fd_periodic;
  } else if (disp == "fd_dirichlet") {
    sc.dispersive = sslab::DispersiveKind::fd_dirichlet;
    sc.boundary = sslab::Boundary::dirichlet_zero;
  } else {
    throw sslab::ConfigError("invalid value for key 'dispersive': '" + disp +
                             "' (spectral | fd_periodic | fd_dirichlet)");
  }
  const std::string split = cfg.get_string("simulation", "splitting", "first_order");
  if (split == "first_order") {
    sc.splitting = sslab::Splitting::first_order;
  } else if (split == "strang") {
    sc.splitting = sslab::Splitting::strang;
  } else {
    throw sslab::ConfigError("invalid value for key 'splitting': '" + split +
                             "' (first_order | strang)");
  }
  setup.initial = cfg.get_string("simulation", "initial", "soliton");
  if (setup.initial != "soliton" && setup.initial != "plane_wave" && setup.initial != "gaussian")
    throw sslab::ConfigError("invalid value for key 'initial': '" + setup.initial +
                             "' (soliton | plane_wave | gaussian)");
  setup.sigma = cfg.get_double("simulation", "sigma", 1.0);
  return setup;
}

sslab::ComplexField make_initial_field(const SimSetup& setup, const sslab::GridPtr& grid) {
  const sslab::SimConfig& sc = setup.config;
  sslab::ComplexField u0(grid);
  if (setup.initial == "soliton") {
    u0 = sslab::make_soliton(grid, sc.amplitude_A, sc.beta, sc.gamma);
  } else if (setup.initial == "plane_wave") {
    u0 = sslab::make_plane_wave(grid, sc.amplitude_A, sc.gamma);
  } else {
    u0 = sslab::make_gaussian(grid, setup.sigma);
  }
  if (sc.noise_std > 0.0) {
    const sslab::ComplexField noise = sslab::make_noise(grid, sc.noise_std, sc.rng_seed);
    for (int m = 0; m < u0.size(); ++m) u0.v[m] += noise.v[m];
  }
  return u0;
}

sslab::RunManifest start_manifest(const std::string& command, const sslab::ConfigFile& cfg,
                                  std::uint64_t seed) {
  sslab::RunManifest man;
  man.command = command;
  man.seed = seed;
  man.config_echo = cfg.raw();
  return man;
}

void write_field_csv(const fs::path& path, const sslab::ComplexField& u) {
  sslab::CsvTable t;
  t.columns = {"x", "re_u", "im_u"};
  for (int m = 0; m < u.size(); ++m)
    t.rows.push_back({u.grid->points[m], u.v[m].real(), u.v[m].imag()});
  sslab::write_csv(path, t);
}

void write_spectrum_csv(const fs::path& path, const sslab::Snapshot& snap) {
  const sslab::SpectrumSnapshot spec = sslab::spectrum(snap);
  sslab::CsvTable t;
  t.columns = {"k", "abs_u_hat"};
  const auto& ks = snap.u.grid->wavenumbers;
  for (std::size_t j = 0; j < ks.size(); ++j) t.rows.push_back({ks[j], spec.magnitudes[j]});
  std::sort(t.rows.begin(), t.rows.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  sslab::write_csv(path, t);
}

// ---------------------------------------------------------------------------

int cmd_simulate(const sslab::ConfigFile& cfg, const Options& opt) {
  SimSetup setup = parse_sim_section(cfg);
  cfg.reject_unknown();
  sslab::SimConfig& sc = setup.config;
  if (opt.seed) sc.rng_seed = *opt.seed;
  if (sc.t_final <= 0.0) throw sslab::ConfigError("t_final must be positive for simulate");
  const sslab::GridPtr grid = sc.make_grid();
  const sslab::ComplexField u0 = make_initial_field(setup, grid);
  sc.finalize();

  const sslab::SimulationRun run = sslab::run_split_step(sc, u0);

  fs::create_directories(opt.out_dir);
  sslab::RunManifest man = start_manifest("simulate", cfg, sc.rng_seed);
  sslab::CsvTable index;
  index.columns = {"index", "time"};
  for (std::size_t i = 0; i < run.snapshots.size(); ++i) {
    const auto& snap = run.snapshots[i];
    const std::string sname = index_name("snapshot", static_cast<int>(i));
    const std::string kname = index_name("spectrum", static_cast<int>(i));
    write_field_csv(fs::path(opt.out_dir) / sname, snap.u);
    write_spectrum_csv(fs::path(opt.out_dir) / kname, snap);
    man.outputs.push_back(sname);
    man.outputs.push_back(kname);
    index.rows.push_back({static_cast<double>(i), snap.t});
  }
  sslab::write_csv(fs::path(opt.out_dir) / "snapshots.csv", index);
  man.outputs.push_back("snapshots.csv");
  man.outputs.push_back("manifest.json");
  sslab::write_manifest(fs::path(opt.out_dir) / "manifest.json", man);

  if (run.blew_up) {
    std::cerr << "simulation blew up at t = " << run.blow_time << ": " << run.blow_reason
              << " (partial outputs written)\n";
    return 3;
  }
  return 0;
}

// One growth-scan point: eigenvalue prediction plus a measured rate from the
// linearized propagator seeded with the predicted mode shape. Below threshold
// (no unstable mode) the measured rate comes from a noise seed instead and
// sits at the noise level; lambda_eig stays NaN.
struct GrowthPoint {
  double C = 0.0;
  double lambda_sim = std::nan("");
  double lambda_eig = std::nan("");
  std::string error;
};

GrowthPoint growth_point(const sslab::SimConfig& base, double C, int eigen_count, double horizon,
                         double floor_time) {
  GrowthPoint pt;
  pt.C = C;
  sslab::SimConfig sc = base;
  sc.ratio_C = C;
  sc.dt = 0.0;
  sc.t_final = 0.0;
  sc.snapshot_interval = 0.0;
  sc.dispersive = sslab::DispersiveKind::fd_periodic;
  sc.boundary = sslab::Boundary::periodic;
  sc.finalize();
  const sslab::RescaledParams p = sslab::rescale_params(sc);
  const sslab::GridPtr grid = sc.make_grid();

  std::optional<double> lam_eig;
  if (p.D > 0.0) {
    const sslab::EigenReport report = sslab::solve_dominant(p, 0.1, eigen_count);
    lam_eig = sslab::growth_rate_physical(report, p);
    if (lam_eig) {
      pt.lambda_eig = *lam_eig;
      const sslab::ComplexField u0 = sslab::mode_seed_field(
          report.pairs[*report.dominant], report.problem, grid, 1e-10);
      sslab::SimConfig run_cfg = sc;
      run_cfg.t_final = horizon / pt.lambda_eig;
      const sslab::SimulationRun run =
          sslab::propagate_linearized_error(run_cfg, sslab::Background::soliton, u0);
      const sslab::KBand band = sslab::unstable_mode_band(p, *grid);
      pt.lambda_sim = sslab::growth_rate(run, band, run_cfg.t_final).rate;
      return pt;
    }
  }
  // below threshold: noise-level slope over a fixed window
  const double noise_std = base.noise_std > 0.0 ? base.noise_std : 1e-10;
  const sslab::ComplexField u0 = sslab::make_noise(grid, noise_std, base.rng_seed);
  sslab::SimConfig run_cfg = sc;
  run_cfg.t_final = floor_time;
  const sslab::SimulationRun run =
      sslab::propagate_linearized_error(run_cfg, sslab::Background::soliton, u0);
  pt.lambda_sim = sslab::growth_rate(run, sslab::high_k_band(*grid, 0.9), floor_time).rate;
  return pt;
}

int cmd_growth(const sslab::ConfigFile& cfg, const Options& opt) {
  sslab::SimConfig base = parse_sim_section(cfg).config;
  if (opt.seed) base.rng_seed = *opt.seed;
  const std::vector<double> c_values = cfg.get_double_list("growth", "c_values");
  const int eigen_count = cfg.get_int("growth", "eigen_count", 24);
  const double horizon = cfg.get_double("growth", "rate_horizon", 5.0);
  const double floor_time = cfg.get_double("growth", "floor_time", 200.0);
  cfg.reject_unknown();

  std::vector<GrowthPoint> points(c_values.size());
  const int team = std::max(1, sslab::kernels::threads());
#pragma omp parallel for schedule(dynamic) num_threads(team)
  for (std::size_t i = 0; i < c_values.size(); ++i) {
    try {
      points[i] = growth_point(base, c_values[i], eigen_count, horizon, floor_time);
    } catch (const std::exception& e) {  // record and keep scanning
      points[i].C = c_values[i];
      points[i].error = e.what();
    }
  }

  fs::create_directories(opt.out_dir);
  sslab::CsvTable t;
  t.columns = {"C", "lambda_sim", "lambda_eig"};
  for (const auto& pt : points) {
    t.rows.push_back({pt.C, pt.lambda_sim, pt.lambda_eig});
    if (!pt.error.empty())
      std::cerr << "growth point C = " << pt.C << " failed: " << pt.error << "\n";
  }
  sslab::write_csv(fs::path(opt.out_dir) / "growth.csv", t);
  sslab::RunManifest man = start_manifest("growth", cfg, base.rng_seed);
  man.outputs = {"growth.csv", "manifest.json"};
  sslab::write_manifest(fs::path(opt.out_dir) / "manifest.json", man);
  return 0;
}

json eigen_report_json(const sslab::EigenReport& report, const sslab::SymmetryCheck& sym,
                       const sslab::RescaledParams& p) {
  json j;
  j["problem"] = {{"D", report.problem.D},
                  {"dX", report.problem.dX},
                  {"M", report.problem.M},
                  {"dimension", report.problem.dim()},
                  {"X_half", report.problem.X_half},
                  {"epsilon", report.problem.epsilon},
                  {"V_amplitude", report.problem.V_amplitude},
                  {"shift", {report.problem.shift_Lambda0.real(), report.problem.shift_Lambda0.imag()}}};
  j["all_converged"] = report.all_converged;
  json pairs = json::array();
  for (const auto& pr : report.pairs) {
    pairs.push_back({{"lambda_re", pr.Lambda.real()},
                     {"lambda_im", pr.Lambda.imag()},
                     {"residual", pr.residual},
                     {"converged", pr.converged},
                     {"localization", pr.localization},
                     {"peak_X", pr.peak_X},
                     {"is_real", pr.is_real},
                     {"outside_core", pr.outside_core}});
  }
  j["pairs"] = pairs;
  if (report.dominant) {
    j["dominant_index"] = *report.dominant;
    j["growth_rate_physical"] = *sslab::growth_rate_physical(report, p);
  } else {
    j["dominant_index"] = nullptr;
    j["growth_rate_physical"] = nullptr;
    j["note"] = "no unstable mode";
  }
  j["symmetry"] = {{"passed", sym.passed},
                   {"inconclusive", sym.inconclusive},
                   {"worst_rel", sym.worst_rel},
                   {"detail", sym.detail}};
  return j;
}

void write_mode_csv(const fs::path& path, const sslab::EigenPair& pair,
                    const sslab::EigenProblem& problem) {
  const std::vector<sslab::cxd> f1 = sslab::mode_component(pair, 0);
  const std::vector<sslab::cxd> f2 = sslab::mode_component(pair, 1);
  sslab::CsvTable t;
  t.columns = {"X", "re_comp1", "im_comp1", "re_comp2", "im_comp2", "abs_envelope"};
  for (std::size_t i = 0; i < f1.size(); ++i) {
    const sslab::cxd env = f1[i] + std::conj(f2[i]);
    t.rows.push_back({problem.nodes_X[i], f1[i].real(), f1[i].imag(), f2[i].real(),
                      f2[i].imag(), std::abs(env)});
  }
  sslab::write_csv(path, t);
}

int cmd_eigen(const sslab::ConfigFile& cfg, const Options& opt) {
  const sslab::SimConfig base = parse_sim_section(cfg).config;
  const double dX = cfg.get_double("eigen", "dx_rescaled", 0.1);
  const int count = cfg.get_int("eigen", "count", 24);
  const bool auto_shift = cfg.get_bool("eigen", "auto_shift", true);
  const double shift_re = cfg.get_double("eigen", "shift_real", 0.0);
  const double shift_im = cfg.get_double("eigen", "shift_imag", 0.0);
  const std::string write_modes = cfg.get_string("eigen", "write_modes", "dominant");
  if (write_modes != "none" && write_modes != "dominant" && write_modes != "all")
    throw sslab::ConfigError("invalid value for key 'write_modes': '" + write_modes +
                             "' (none | dominant | all)");

  sslab::RescaledParams p;
  if (cfg.has("eigen", "d")) {
    p = sslab::rescale_for_D(cfg.get_double("eigen", "d"), base.beta, base.amplitude_A,
                             base.length_L, base.n_points);
  } else if (cfg.has("eigen", "ratio_c")) {
    sslab::SimConfig sc = base;
    sc.ratio_C = cfg.get_double("eigen", "ratio_c");
    sc.dt = 0.0;
    p = sslab::rescale_params(sc);
  } else {
    throw sslab::ConfigError("section [eigen] needs either key 'd' or key 'ratio_c'");
  }
  cfg.reject_unknown();

  sslab::EigenReport report;
  try {
    if (auto_shift) {
      report = sslab::solve_dominant(p, dX, count);
    } else {
      const auto problem = sslab::EigenProblem::make(p, dX, {shift_re, shift_im});
      report = sslab::solve_smallest(problem, count);
    }
  } catch (const std::runtime_error& e) {
    std::cerr << "eigensolver failed: " << e.what() << "\n";
    return 4;
  }
  const sslab::SymmetryCheck sym = sslab::symmetry_check(report);

  fs::create_directories(opt.out_dir);
  sslab::RunManifest man = start_manifest("eigen", cfg, 0);
  const json j = eigen_report_json(report, sym, p);
  man.outputs.push_back("eigen_report.json");
  sslab::write_text_atomic(fs::path(opt.out_dir) / "eigen_report.json", j.dump(2) + "\n");

  for (std::size_t i = 0; i < report.pairs.size(); ++i) {
    const bool is_dominant = report.dominant && *report.dominant == i;
    if (write_modes == "all" || (write_modes == "dominant" && is_dominant)) {
      const std::string name = index_name("mode", static_cast<int>(i));
      write_mode_csv(fs::path(opt.out_dir) / name, report.pairs[i], report.problem);
      man.outputs.push_back(name);
    }
  }
  man.outputs.push_back("manifest.json");
  sslab::write_manifest(fs::path(opt.out_dir) / "manifest.json", man);

  if (!report.all_converged) {
    std::cerr << "eigensolver did not converge all pairs (partial report written)\n";
    return 4;
  }
  return 0;
}

int cmd_wkb(const sslab::ConfigFile& cfg, const Options& opt) {
  const sslab::SimConfig base = parse_sim_section(cfg).config;
  const double d_min = cfg.get_double("wkb", "d_min", 0.002);
  const double d_max = cfg.get_double("wkb", "d_max", 0.03);
  const int d_steps = cfg.get_int("wkb", "d_steps", 57);
  const std::string method_name = cfg.get_string("wkb", "method", "integral");
  sslab::WkbMethod method;
  if (method_name == "integral") {
    method = sslab::WkbMethod::action_integral;
  } else if (method_name == "closed_form") {
    method = sslab::WkbMethod::closed_form;
  } else {
    throw sslab::ConfigError("invalid value for key 'method': '" + method_name +
                             "' (integral | closed_form)");
  }
  std::vector<int> birth_n;
  if (cfg.has("wkb", "birth_n")) {
    for (double v : cfg.get_double_list("wkb", "birth_n"))
      birth_n.push_back(static_cast<int>(std::llround(v)));
  }
  const double birth_nu = cfg.get_double("wkb", "birth_nu", 1.0);
  cfg.reject_unknown();

  auto params_for = [&](double D) {
    return sslab::rescale_for_D(D, base.beta, base.amplitude_A, base.length_L, base.n_points);
  };

  fs::create_directories(opt.out_dir);
  sslab::RunManifest man = start_manifest("wkb", cfg, 0);

  sslab::CsvTable scan;
  scan.columns = {"D", "n_nu1", "n_nu3", "difference"};
  for (int i = 0; i < d_steps; ++i) {
    const double D =
        d_steps == 1 ? d_min : d_min + (d_max - d_min) * i / static_cast<double>(d_steps - 1);
    double n1 = std::nan("");
    double n3 = std::nan("");
    try {
      const sslab::RescaledParams p = params_for(D);
      if (method == sslab::WkbMethod::closed_form) {
        n1 = sslab::n_of_D_closed_form(D, 1.0, p);
        n3 = sslab::n_of_D_closed_form(D, 3.0, p);
      } else {
        n1 = sslab::n_of_D_integral(D, 1.0, p).n_sech;
        n3 = sslab::n_of_D_integral(D, 3.0, p).n_sech;
      }
    } catch (const std::exception& e) {
      std::cerr << "wkb scan point D = " << D << " skipped: " << e.what() << "\n";
    }
    scan.rows.push_back({D, n1, n3, n1 - n3});
  }
  sslab::write_csv(fs::path(opt.out_dir) / "wkb_scan.csv", scan);
  man.outputs.push_back("wkb_scan.csv");

  sslab::CsvTable births;
  births.columns = {"n", "nu", "D_birth"};
  for (int n : birth_n) {
    double Db = std::nan("");
    try {
      // any positive D fixes epsilon and the domain; the birth search re-maps C(D)
      Db = sslab::predict_birth_value(n, birth_nu, params_for(0.01), method);
    } catch (const std::exception& e) {
      std::cerr << "birth value n = " << n << " skipped: " << e.what() << "\n";
    }
    births.rows.push_back({static_cast<double>(n), birth_nu, Db});
  }
  sslab::write_csv(fs::path(opt.out_dir) / "births.csv", births);
  man.outputs.push_back("births.csv");

  json ccr;
  try {
    const sslab::CcrHypothesis hyp = sslab::hypothesize_C_cr(params_for(0.01), method);
    ccr = {{"D_low", hyp.D_low},         {"D_high", hyp.D_high}, {"D_crossing", hyp.D_crossing},
           {"C_cr", hyp.C_cr},           {"hypothesis", true},
           {"note", "index-count extrapolation, not a measured stability boundary"}};
  } catch (const std::exception& e) {
    ccr = {{"hypothesis", true}, {"error", e.what()}};
  }
  sslab::write_text_atomic(fs::path(opt.out_dir) / "ccr_hypothesis.json", ccr.dump(2) + "\n");
  man.outputs.push_back("ccr_hypothesis.json");

  man.outputs.push_back("manifest.json");
  sslab::write_manifest(fs::path(opt.out_dir) / "manifest.json", man);
  return 0;
}

int cmd_thresholds(const sslab::ConfigFile& cfg) {
  sslab::SimConfig sc = parse_sim_section(cfg).config;
  cfg.reject_unknown();
  const double dx = sc.mesh_dx();
  std::printf("grid:                 L = %g, N = %d, dx = %.6g\n", sc.length_L, sc.n_points, dx);
  std::printf("spectral dt threshold (localized background):  %.6e\n",
              sslab::threshold_ssm_spectral(sc.beta, dx));
  const auto fd_pw = sslab::threshold_fd_planewave(sc.beta, sc.amplitude_A, dx);
  if (fd_pw)
    std::printf("fd plane-wave dt threshold:                    %.6e\n", *fd_pw);
  else
    std::printf("fd plane-wave dt threshold:                    none (unconditionally stable for beta < 0)\n");
  const double c_thr = sslab::threshold_fd_soliton(sc.beta, sc.amplitude_A);
  std::printf("fd soliton C threshold:                        %.6g  (dt = %.6e)\n", c_thr,
              std::sqrt(c_thr) * dx);
  if (sc.ratio_C > 0.0 || sc.dt > 0.0) {
    sc.finalize();
    std::printf("configured step:      dt = %.6e  (C = %.6g)\n", sc.dt, sc.ratio_C);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sslab: split-step integrators for the 1-D NLS and the numerical-instability "
               "analysis toolbox"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool config_required) {
    auto* c = sub->add_option("--config", opt.config_path, "configuration file");
    if (config_required) c->required();
    sub->add_option("--out", opt.out_dir, "output directory (default: out)");
    sub->add_option("--seed", opt.seed, "override the configured RNG seed");
    sub->add_option("--threads", opt.threads, "worker thread count (env: SSLAB_THREADS)");
  };

  CLI::App* c_sim = app.add_subcommand("simulate", "integrate the NLS and write snapshots");
  CLI::App* c_growth = app.add_subcommand("growth", "growth-rate C-scan (measured vs predicted)");
  CLI::App* c_eigen = app.add_subcommand("eigen", "localized-mode eigenproblem report");
  CLI::App* c_wkb = app.add_subcommand("wkb", "semiclassical mode-count scan");
  CLI::App* c_thr = app.add_subcommand("thresholds", "print stability thresholds");
  for (CLI::App* sub : {c_sim, c_growth, c_eigen, c_wkb}) add_common(sub, true);
  add_common(c_thr, false);

  CLI11_PARSE(app, argc, argv);

  if (opt.threads <= 0) {
    if (const char* env = std::getenv("SSLAB_THREADS")) opt.threads = std::atoi(env);
  }
  if (opt.threads > 0) sslab::kernels::set_threads(opt.threads);

  try {
    const sslab::ConfigFile cfg = opt.config_path.empty()
                                      ? sslab::ConfigFile::parse_string("", "<defaults>")
                                      : sslab::ConfigFile::parse_file(opt.config_path);
    if (c_sim->parsed()) return cmd_simulate(cfg, opt);
    if (c_growth->parsed()) return cmd_growth(cfg, opt);
    if (c_eigen->parsed()) return cmd_eigen(cfg, opt);
    if (c_wkb->parsed()) return cmd_wkb(cfg, opt);
    if (c_thr->parsed()) return cmd_thresholds(cfg);
  } catch (const sslab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

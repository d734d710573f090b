// Parallel kernels vs the serial reference across field sizes. Run with
// --benchmark_counters_tabular=true; SSLAB_THREADS or kernels::set_threads
// picks the OpenMP width for the parallel side.

#include <benchmark/benchmark.h>

#include <complex>
#include <thread>
#include <vector>

#include "sslab/kernels.hpp"
#include "sslab/rng.hpp"

using sslab::cxd;

namespace {

std::vector<cxd> random_field(int n, std::uint64_t seed) {
  sslab::Rng rng(seed);
  std::vector<cxd> v(n);
  for (auto& z : v) z = cxd{rng.next_normal(), rng.next_normal()};
  return v;
}

template <bool Parallel>
void bm_phase_rotate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<cxd> v = random_field(n, 1);
  for (auto _ : state) {
    if constexpr (Parallel)
      sslab::kernels::phase_rotate(v, 2.0, 1e-3);
    else
      sslab::kernels::serial_ref::phase_rotate(v, 2.0, 1e-3);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}

template <bool Parallel>
void bm_multiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<cxd> v = random_field(n, 2);
  const std::vector<cxd> mult = random_field(n, 3);
  for (auto _ : state) {
    if constexpr (Parallel)
      sslab::kernels::multiply(v, mult);
    else
      sslab::kernels::serial_ref::multiply(v, mult);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}

template <bool Parallel>
void bm_linearized_nonlinear(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<cxd> u = random_field(n, 4);
  const std::vector<cxd> ph = random_field(n, 5);
  const std::vector<cxd> u2 = random_field(n, 6);
  std::vector<double> au2(n);
  for (int i = 0; i < n; ++i) au2[i] = std::norm(u2[i]);
  std::vector<cxd> out(n);
  for (auto _ : state) {
    if constexpr (Parallel)
      sslab::kernels::linearized_nonlinear(out, u, ph, u2, cxd{0.6, 0.8}, au2, 2.0, 1e-3);
    else
      sslab::kernels::serial_ref::linearized_nonlinear(out, u, ph, u2, cxd{0.6, 0.8}, au2, 2.0,
                                                       1e-3);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}

void field_sizes(benchmark::internal::Benchmark* b) { b->RangeMultiplier(4)->Range(1 << 12, 1 << 16); }

BENCHMARK(bm_phase_rotate<false>)->Name("phase_rotate/serial")->Apply(field_sizes);
BENCHMARK(bm_phase_rotate<true>)->Name("phase_rotate/parallel")->Apply(field_sizes);
BENCHMARK(bm_multiply<false>)->Name("multiply/serial")->Apply(field_sizes);
BENCHMARK(bm_multiply<true>)->Name("multiply/parallel")->Apply(field_sizes);
BENCHMARK(bm_linearized_nonlinear<false>)->Name("linearized_nonlinear/serial")->Apply(field_sizes);
BENCHMARK(bm_linearized_nonlinear<true>)->Name("linearized_nonlinear/parallel")->Apply(field_sizes);

}  // namespace

int main(int argc, char** argv) {
  sslab::kernels::set_threads(static_cast<int>(std::thread::hardware_concurrency()));
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}

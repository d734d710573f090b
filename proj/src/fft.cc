#include "sslab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace sslab {
namespace {

// One cached in-place plan pair per transform size. FFTW_ESTIMATE keeps the
// algorithm choice deterministic run to run (bit-stable outputs).
struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  fftw_complex* buf = nullptr;
  int n = 0;
};

std::map<int, PlanPair>& plan_cache() {
  static std::map<int, PlanPair> cache;
  return cache;
}
std::mutex plan_mutex;

PlanPair& plans_for(int n) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto it = plan_cache().find(n);
  if (it != plan_cache().end()) return it->second;
  PlanPair p;
  p.n = n;
  p.buf = fftw_alloc_complex(n);
  p.fwd = fftw_plan_dft_1d(n, p.buf, p.buf, FFTW_FORWARD, FFTW_ESTIMATE);
  p.bwd = fftw_plan_dft_1d(n, p.buf, p.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  if (!p.fwd || !p.bwd) throw std::runtime_error("fft: plan creation failed");
  return plan_cache().emplace(n, p).first->second;
}

void run_plan(std::vector<cxd>& v, bool forward) {
  const int n = static_cast<int>(v.size());
  if (n == 0) throw std::invalid_argument("fft: empty field");
  PlanPair& p = plans_for(n);
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto* b = reinterpret_cast<cxd*>(p.buf);
  for (int i = 0; i < n; ++i) b[i] = v[i];
  fftw_execute(forward ? p.fwd : p.bwd);
  if (forward) {
    for (int i = 0; i < n; ++i) v[i] = b[i];
  } else {
    const double inv = 1.0 / n;
    for (int i = 0; i < n; ++i) v[i] = b[i] * inv;
  }
}

}  // namespace

void dft_inplace(std::vector<cxd>& v) { run_plan(v, true); }
void idft_inplace(std::vector<cxd>& v) { run_plan(v, false); }

ComplexField dft(const ComplexField& f) {
  if (f.size() != f.grid->n_points) throw std::invalid_argument("dft: field/grid length mismatch");
  ComplexField out(f.grid, f.v);
  dft_inplace(out.v);
  return out;
}

ComplexField idft(const ComplexField& f) {
  if (f.size() != f.grid->n_points) throw std::invalid_argument("idft: field/grid length mismatch");
  ComplexField out(f.grid, f.v);
  idft_inplace(out.v);
  return out;
}

}  // namespace sslab

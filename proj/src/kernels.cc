#include "sslab/kernels.hpp"

#include <atomic>
#include <cmath>

namespace sslab::kernels {
namespace {
std::atomic<int> g_threads{1};
}

void set_threads(int n) { g_threads.store(n < 1 ? 1 : n); }
int threads() { return g_threads.load(); }

namespace serial_ref {

void phase_rotate(std::span<cxd> v, double gamma, double dt) {
  for (auto& z : v) {
    const double phi = gamma * std::norm(z) * dt;
    z *= cxd{std::cos(phi), std::sin(phi)};
  }
}

void multiply(std::span<cxd> v, std::span<const cxd> mult) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= mult[i];
}

void linearized_nonlinear(std::span<cxd> out, std::span<const cxd> u, std::span<const cxd> ph,
                          std::span<const cxd> u2, cxd c2, std::span<const double> au2,
                          double gamma, double dt) {
  const cxd ig{0.0, gamma * dt};
  for (std::size_t i = 0; i < u.size(); ++i)
    out[i] = ph[i] * (u[i] + ig * (u2[i] * c2 * std::conj(u[i]) + au2[i] * u[i]));
}

}  // namespace serial_ref

void phase_rotate(std::span<cxd> v, double gamma, double dt) {
  const int nt = threads();
  if (nt <= 1) {
    serial_ref::phase_rotate(v, gamma, dt);
    return;
  }
  const std::int64_t n = static_cast<std::int64_t>(v.size());
#pragma omp parallel for num_threads(nt) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const double phi = gamma * std::norm(v[i]) * dt;
    v[i] *= cxd{std::cos(phi), std::sin(phi)};
  }
}

void multiply(std::span<cxd> v, std::span<const cxd> mult) {
  const int nt = threads();
  if (nt <= 1) {
    serial_ref::multiply(v, mult);
    return;
  }
  const std::int64_t n = static_cast<std::int64_t>(v.size());
#pragma omp parallel for num_threads(nt) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) v[i] *= mult[i];
}

void linearized_nonlinear(std::span<cxd> out, std::span<const cxd> u, std::span<const cxd> ph,
                          std::span<const cxd> u2, cxd c2, std::span<const double> au2,
                          double gamma, double dt) {
  const int nt = threads();
  if (nt <= 1) {
    serial_ref::linearized_nonlinear(out, u, ph, u2, c2, au2, gamma, dt);
    return;
  }
  const cxd ig{0.0, gamma * dt};
  const std::int64_t n = static_cast<std::int64_t>(u.size());
#pragma omp parallel for num_threads(nt) schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    out[i] = ph[i] * (u[i] + ig * (u2[i] * c2 * std::conj(u[i]) + au2[i] * u[i]));
}

}  // namespace sslab::kernels

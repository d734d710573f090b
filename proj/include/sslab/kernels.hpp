#pragma once

#include <span>

#include "sslab/grid.hpp"

namespace sslab::kernels {

// Thread count used by the OpenMP kernels below; 1 = serial. Set from the CLI
// (--threads / SSLAB_THREADS). All kernels are pointwise, so results are
// bitwise identical for any thread count.
void set_threads(int n);
int threads();

// v[i] *= exp(i * gamma * |v[i]|^2 * dt)   (exact nonlinear sub-step)
void phase_rotate(std::span<cxd> v, double gamma, double dt);

// v[i] *= mult[i]
void multiply(std::span<cxd> v, std::span<const cxd> mult);

// out[i] = ph[i] * (u[i] + i*gamma*dt*(u2[i]*c2 * conj(u[i]) + au2[i]*u[i]))
// One linearized nonlinear sub-step about a frozen background: ph is the
// background phase factor e^{i gamma |U|^2 dt}, u2 = U^2, c2 the accumulated
// background phase e^{2 i omega t_n}, au2 = |U|^2.
void linearized_nonlinear(std::span<cxd> out, std::span<const cxd> u, std::span<const cxd> ph,
                          std::span<const cxd> u2, cxd c2, std::span<const double> au2,
                          double gamma, double dt);

// Plain serial implementations kept as the reference the parallel kernels are
// checked (and benchmarked) against.
namespace serial_ref {
void phase_rotate(std::span<cxd> v, double gamma, double dt);
void multiply(std::span<cxd> v, std::span<const cxd> mult);
void linearized_nonlinear(std::span<cxd> out, std::span<const cxd> u, std::span<const cxd> ph,
                          std::span<const cxd> u2, cxd c2, std::span<const double> au2,
                          double gamma, double dt);
}  // namespace serial_ref

}  // namespace sslab::kernels

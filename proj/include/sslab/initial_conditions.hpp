#pragma once

#include "sslab/grid.hpp"

namespace sslab {

// Stationary soliton profile at t = 0:  A*sqrt(2/gamma) * sech(A x / sqrt(-beta)).
// Its time dependence is the phase e^{i A^2 t}. Requires beta < 0, gamma > 0.
ComplexField make_soliton(const GridPtr& grid, double A, double beta, double gamma);

// Constant background A/sqrt(gamma) (phase rotates at A^2 in time).
ComplexField make_plane_wave(const GridPtr& grid, double A, double gamma);

// Complex circular Gaussian noise: real and imaginary parts independent,
// each with standard deviation std/sqrt(2), so the complex sample has
// standard deviation `std`. Same seed -> bitwise identical field.
ComplexField make_noise(const GridPtr& grid, double std, std::uint64_t seed);

// Gaussian pulse exp(-x^2 / (2 sigma^2)); free-dispersion test article.
ComplexField make_gaussian(const GridPtr& grid, double sigma);

}  // namespace sslab

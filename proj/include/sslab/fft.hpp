#pragma once

#include "sslab/grid.hpp"

namespace sslab {

// Unnormalized forward DFT:  u_hat_j = sum_m u_m exp(-i k_j x-index conventions of FFTW).
// idft applies the 1/N factor, so idft(dft(u)) == u and Parseval reads
// sum |u_m|^2 = (1/N) sum |u_hat_j|^2.
ComplexField dft(const ComplexField& f);
ComplexField idft(const ComplexField& f);

// In-place variants on raw sample vectors (plans are cached per size).
void dft_inplace(std::vector<cxd>& v);
void idft_inplace(std::vector<cxd>& v);

}  // namespace sslab

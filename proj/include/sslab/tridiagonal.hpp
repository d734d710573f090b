#pragma once

#include <span>
#include <vector>

#include "sslab/grid.hpp"

namespace sslab {

// Solve T x = rhs where T is tridiagonal with `diag` on the main diagonal and
// `off` on both the sub- and super-diagonal (the schemes here are symmetric in
// structure). Thomas algorithm, no pivoting; throws std::runtime_error on a
// vanishing pivot.
std::vector<cxd> solve_tridiagonal(std::span<const cxd> diag, std::span<const cxd> off,
                                   std::span<const cxd> rhs);

// Solve A x = rhs where A is the tridiagonal above plus periodic corner
// entries A(0, n-1) = A(n-1, 0) = corner. Sherman-Morrison rank-1 update of
// the acyclic solve.
std::vector<cxd> solve_cyclic_tridiagonal(std::span<const cxd> diag, std::span<const cxd> off,
                                          cxd corner, std::span<const cxd> rhs);

}  // namespace sslab

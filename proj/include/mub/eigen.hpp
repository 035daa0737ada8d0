#pragma once

#include <vector>

#include "mub/kernels.hpp"
#include "mub/matrix.hpp"

namespace mub {

struct EigResult {
  std::vector<double> values;  // ascending
  Basis vectors;               // column j belongs to values[j]
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Sweeps stop once the off-diagonal HS norm is <= 1e-13 * ||h||_HS.
/// Throws NotHermitian if ||h - h*||_HS > 1e-10 * (1 + ||h||_HS).
EigResult hermitian_eig(const ComplexMatrix& h);

/// Eigenvalues only (same solver, no vector accumulation).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// True when every eigenvalue of the Hermitian matrix h is > -threshold.
///
/// Decided by a Cholesky factorization of h + threshold * 1, which is far
/// cheaper than a full eigendecomposition at the sizes Choi matrices reach.
bool is_psd(const ComplexMatrix& h, double threshold,
            kernels::Exec exec = kernels::Exec::parallel);

}  // namespace mub

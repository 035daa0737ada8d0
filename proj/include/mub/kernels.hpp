#pragma once

// Hot inner loops, each in a serial reference form and an OpenMP form.
//
// The parallel variants only split work across independent output entries;
// every entry is accumulated in the same order as the serial loop, so both
// variants return bit-identical results for any thread count.

#include <cstddef>
#include <span>
#include <vector>

#include "mub/matrix.hpp"

namespace mub::kernels {

enum class Exec { serial, parallel };

/// c = a * b for square row-major matrices of dimension n.
void gemm(Exec exec, std::size_t n, std::span<const cdouble> a, std::span<const cdouble> b,
          std::span<cdouble> c);

/// coeffs[k] = <basis[k], v> (conjugate-linear in basis[k]).
void project_coefficients(Exec exec, std::span<const std::vector<cdouble>> basis,
                          std::span<const cdouble> v, std::span<cdouble> coeffs);

/// v -= sum_k coeffs[k] * basis[k].
void subtract_combination(Exec exec, std::span<const std::vector<cdouble>> basis,
                          std::span<const cdouble> coeffs, std::span<cdouble> v);

/// In-place lower Cholesky factorization of the Hermitian n x n matrix a + shift * 1.
/// Returns false as soon as a non-positive pivot appears, i.e. when the shifted
/// matrix is not positive definite.
bool cholesky(Exec exec, std::size_t n, std::span<cdouble> a, double shift);

}  // namespace mub::kernels

#pragma once

#include <cstdint>
#include <span>

#include "mub/matrix.hpp"

namespace mub {

/// Common eigenbasis of a family of pairwise commuting normal matrices.
///
/// A seeded random real combination of the Hermitian and anti-Hermitian parts
/// is eigendecomposed; clusters of (near-)equal eigenvalues are split by
/// recursing on the family restricted to the cluster. Up to 8 fresh draws are
/// tried per level before giving up with DegenerateFamily. The result depends
/// only on the family and the seed.
///
/// Throws NotCommuting when some ||[A_i, A_j]||_HS > tol * (1 + ||A_i|| ||A_j||)
/// (i == j reports a non-normal member).
Basis simultaneous_diagonalize(std::span<const ComplexMatrix> family, std::uint64_t seed,
                               double tol = 1e-9);

/// Largest off-diagonal HS mass of U* A U relative to 1 + ||A||, over the family.
double max_offdiagonal_residual(std::span<const ComplexMatrix> family, const ComplexMatrix& u);

}  // namespace mub

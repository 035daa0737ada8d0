#pragma once

#include <cstdint>
#include <random>

#include "mub/matrix.hpp"

namespace mub {

/// Seeded generator used for every random draw in the library.
using Rng = std::mt19937_64;

double random_normal(Rng& rng);
/// Entries with independent standard normal real and imaginary parts.
ComplexMatrix random_ginibre(std::size_t dim, Rng& rng);
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);
/// Gram-Schmidt of a Ginibre matrix with column phases fixed by the QR
/// convention, giving a Haar-distributed unitary.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

}  // namespace mub

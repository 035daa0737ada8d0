#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "mub/field.hpp"
#include "mub/matrix.hpp"

namespace mub {

struct MubCollection {
  std::size_t dim = 0;
  std::vector<Basis> bases;
  double tol = 1e-9;
};

struct VerifyReport {
  bool pass = false;
  double max_unbiased_dev = 0.0;   // max | |<e,f>| sqrt(d) - 1 | over cross pairs
  double max_unitarity_dev = 0.0;  // max ||U*U - 1||_HS / sqrt(d)
  std::size_t pair_count = 0;
  std::size_t basis_count = 0;
  bool within_count_bound = true;  // basis_count <= d + 1
  std::pair<std::size_t, std::size_t> worst_pair{0, 0};
};

/// Checks unitarity of every basis, unbiasedness of every pair, and that at
/// most d + 1 bases are present. Never throws on bad data.
VerifyReport verify_collection(const MubCollection& c);

/// Largest | |<e_k, f_j>| sqrt(d) - 1 | between the vectors of two bases.
double unbiased_deviation(const Basis& e, const Basis& f);

/// Standard basis and the Fourier basis F_jk = w^(jk) / sqrt(d), w = exp(2 pi i / d).
std::pair<Basis, Basis> standard_and_fourier(std::size_t d);

/// Complete set of d + 1 mutually unbiased bases for a prime power d <= 64.
///
/// Basis 0 is the standard basis. Basis 1 + a (a in GF(d), enumerated by
/// element index) has columns v_b, b in GF(d), with entries at x in GF(d):
///   odd p:  w_p^tr(a x^2 + b x) / sqrt(d)
///   p = 2:  i^Q_a(x) (-1)^tr(b x) / sqrt(d)
/// where Q_a is the Z_4 lift x^T S x of the binary form S_ij = tr(a x^i x^j)
/// in polynomial-basis coordinates. Every first row is real and positive.
///
/// Throws Unsupported outside 2..64, NotPrimePower otherwise when d != p^alpha.
MubCollection construct_complete_mub(std::size_t d,
                                     std::shared_ptr<const FieldSpec> field_override = nullptr);

}  // namespace mub

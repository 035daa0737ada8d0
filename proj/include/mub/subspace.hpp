#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mub/matrix.hpp"

namespace mub {

/// A subspace of M_d(C) held as an explicit Hilbert-Schmidt orthonormal basis.
class OperatorSubspace {
 public:
  OperatorSubspace() = default;
  explicit OperatorSubspace(std::size_t dim) : dim_(dim) {}
  /// Takes the list as-is; callers that need the orthonormality invariant
  /// checked use gram_deviation() or go through gram_schmidt().
  OperatorSubspace(std::size_t dim, std::vector<ComplexMatrix> onb);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return onb_.size(); }
  bool empty() const noexcept { return onb_.empty(); }
  const std::vector<ComplexMatrix>& onb() const noexcept { return onb_; }
  const ComplexMatrix& operator[](std::size_t i) const { return onb_[i]; }

  /// Orthogonal projection X -> sum_k <B_k, X> B_k.
  ComplexMatrix project(const ComplexMatrix& x) const;
  /// ||X - project(X)||_HS
  double distance_to(const ComplexMatrix& x) const;
  /// max_ij |<B_i, B_j> - delta_ij|
  double gram_deviation() const;

 private:
  std::size_t dim_ = 0;
  std::vector<ComplexMatrix> onb_;
};

/// Orthonormalizes in input order (Gram-Schmidt with one reorthogonalization
/// pass). Elements whose residual norm falls below tol are dropped.
OperatorSubspace gram_schmidt(std::span<const ComplexMatrix> vectors, double tol = 1e-12);
OperatorSubspace gram_schmidt(std::size_t dim, std::span<const ComplexMatrix> vectors,
                              double tol = 1e-12);

/// HS-orthonormal basis of the complement of sub in M_d(C).
///
/// The input basis is extended by matrix units; at each step the unit with the
/// largest residual is taken (lowest index on ties), so the result is
/// deterministic. Throws InvalidSubspace if sub is not orthonormal within
/// ortho_tol.
OperatorSubspace orthogonal_complement(const OperatorSubspace& sub, double ortho_tol = 1e-9);

/// The d^2 x d^2 projector sum_k vec(B_k) vec(B_k)^*, vec being row-major.
/// Two subspaces are equal iff their span projectors are.
ComplexMatrix span_projector(const OperatorSubspace& sub);

/// ||span_projector(a) - span_projector(b)||_HS
double subspace_distance(const OperatorSubspace& a, const OperatorSubspace& b);

}  // namespace mub

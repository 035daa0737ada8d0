#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mub/matrix.hpp"
#include "mub/subspace.hpp"

namespace mub {

/// Maximal abelian *-subalgebra spanned by the rank-one projections onto the
/// vectors of an orthonormal basis.
struct Masa {
  Basis basis;
  std::vector<ComplexMatrix> projections;  // P_j = e_j e_j^*
  OperatorSubspace onb;                    // HS-orthonormal basis of the span

  std::size_t dim() const noexcept { return basis.dim(); }
};

/// Throws NotUnitary when the basis deviates from unitarity by more than tol.
Masa masa_from_basis(const Basis& e, double tol = 1e-9);

/// Worst violation of the projection-family invariants (self-adjoint,
/// idempotent, unit trace, mutually orthogonal, summing to 1).
double masa_defect(const Masa& m);

/// Conditional expectation onto the MASA as the pinching sum_j P_j X P_j.
ComplexMatrix cond_expect(const Masa& m, const ComplexMatrix& x);
/// Same map written over the MASA's HS-orthonormal basis: sum_k A_k^* X A_k.
ComplexMatrix cond_expect_kraus(const Masa& m, const ComplexMatrix& x);

struct OrthogonalityReport {
  bool orthogonal = false;       // trace-factorization verdict
  bool unbiased = false;         // overlap verdict on the underlying bases
  double trace_deviation = 0.0;  // max |sqrt(tau(PQ) / (tau(P) tau(Q))) - 1|
  double overlap_deviation = 0.0;  // max | |<e,f>| sqrt(d) - 1 |
  bool routes_agree() const noexcept { return orthogonal == unbiased; }
};

/// Quasi-orthogonality of two MASAs: tau(PQ) = tau(P) tau(Q) for every pair of
/// minimal projections, with tau the normalized trace. The overlap criterion on
/// the underlying bases is evaluated independently and reported alongside.
OrthogonalityReport masas_orthogonal(const Masa& a, const Masa& b, double tol = 1e-9);

/// sum_k A_k^* X A_k over a full orthonormal basis of M_d(C); equals Tr(X) 1.
/// Throws NotFullOnb unless onb has d^2 HS-orthonormal elements.
ComplexMatrix onb_conjugation_sum(const OperatorSubspace& onb, const ComplexMatrix& x);

/// A linear map on M_d(C), held as Kraus operators (X -> sum_k B_k^* X B_k),
/// as a d^2 x d^2 matrix acting on row-major vec(X), or both.
class LinearMapOnMatrices {
 public:
  static LinearMapOnMatrices from_kraus(std::size_t dim, std::vector<ComplexMatrix> kraus);
  static LinearMapOnMatrices from_matrix_form(std::size_t dim, ComplexMatrix matrix_form);
  /// HS-orthogonal projection onto sub, built column by column from the
  /// images of the matrix units.
  static LinearMapOnMatrices projection_onto(const OperatorSubspace& sub);
  static LinearMapOnMatrices transpose_map(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const std::optional<std::vector<ComplexMatrix>>& kraus() const noexcept { return kraus_; }
  const std::optional<ComplexMatrix>& matrix_form() const noexcept { return matrix_form_; }

  /// Attaches a Kraus form to a map given in matrix form; throws InvalidMap if
  /// the two disagree on some matrix unit by more than tol.
  LinearMapOnMatrices with_kraus(std::vector<ComplexMatrix> kraus, double tol = 1e-10) const;

  /// Uses the matrix form when present.
  ComplexMatrix apply(const ComplexMatrix& x) const;
  ComplexMatrix apply_kraus(const ComplexMatrix& x) const;

  /// max over matrix units of ||kraus(E) - matrix_form(E)||_HS; throws
  /// InvalidMap unless both forms are present.
  double form_disagreement() const;

 private:
  LinearMapOnMatrices(std::size_t dim) : dim_(dim) {}
  std::size_t dim_ = 0;
  std::optional<std::vector<ComplexMatrix>> kraus_;
  std::optional<ComplexMatrix> matrix_form_;
};

/// Choi matrix of id_n (x) map: sum_{I,J} E_IJ (x) (id_n (x) map)(E_IJ) over the
/// matrix units of M_{n d}; size (n d)^2. It is positive semidefinite exactly
/// when the map is completely positive.
ComplexMatrix choi_matrix(const LinearMapOnMatrices& map, std::size_t amplification);

struct PositivityReport {
  bool psd = false;
  double threshold = 0.0;   // eigenvalues above -threshold count as non-negative
  double choi_norm = 0.0;   // ||C||_HS
  std::optional<double> min_eigenvalue;  // only computed up to eig_limit
};

/// PSD test of choi_matrix(map, n) at threshold rel_threshold * ||C||_HS.
/// The minimum eigenvalue is computed as well when C has at most eig_limit rows.
PositivityReport is_k_positive(const LinearMapOnMatrices& map, std::size_t n,
                               double rel_threshold = 1e-9, std::size_t eig_limit = 256);

enum class SubalgebraVerdict { Subalgebra, NotSubalgebra, Disagreement };
std::string_view to_string(SubalgebraVerdict v);

struct SubalgebraReport {
  SubalgebraVerdict verdict = SubalgebraVerdict::Disagreement;
  // 2-positivity of the orthogonal projection E_K
  PositivityReport positivity;
  // closure: max ||(1 - E_K)(B_i B_j)||_HS over basis pairs
  bool closed = false;
  double closure_residual = 0.0;
  // E_K(X*X) >= E_K(X*) E_K(X) on random X, with equality for X in K
  bool schwarz_holds = false;
  double schwarz_min_eigenvalue = 0.0;
  double multiplicative_defect = 0.0;
};

/// Decides whether a self-adjoint unital subspace is closed under
/// multiplication, three ways: 2-positivity of the orthogonal projection,
/// direct closure of basis products, and the Schwarz-type operator inequality
/// with its equality case on K. Throws HypothesisFailed when K is not
/// self-adjoint or does not contain 1.
SubalgebraReport is_subalgebra(const OperatorSubspace& k, double tol = 1e-9,
                               std::uint64_t seed = 0);

enum class MasaStage { Passed, Dimension, ContainsUnit, SelfAdjoint, Subalgebra, Abelian };
std::string_view to_string(MasaStage s);

struct MasaReport {
  bool passed = false;
  MasaStage failed_at = MasaStage::Passed;
  std::size_t dimension = 0;
  double unit_residual = 0.0;
  double adjoint_residual = 0.0;
  std::optional<SubalgebraReport> subalgebra;
  double max_commutator = 0.0;
};

/// Checks, in order, that K has dimension d, contains 1, is self-adjoint, is a
/// subalgebra and is abelian; stops at the first failure.
MasaReport verify_masa(const OperatorSubspace& k, double tol = 1e-9, std::uint64_t seed = 0);

}  // namespace mub

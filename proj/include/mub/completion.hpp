#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mub/construct.hpp"
#include "mub/operator_space.hpp"
#include "mub/subspace.hpp"

namespace mub {

/// HS-orthonormal basis of the traceless part of a MASA (d - 1 elements).
OperatorSubspace traceless_onb(const Masa& m);

/// The orthogonal complement of the sum of the traceless parts of d pairwise
/// quasi-orthogonal MASAs. This d-dimensional subspace is the only place a
/// further quasi-orthogonal MASA can live.
///
/// Throws WrongCount unless exactly d MASAs are given, NotMub (naming the
/// worst pair) unless they are pairwise quasi-orthogonal within tol.
OperatorSubspace missing_subspace(const std::vector<Masa>& masas, double tol = 1e-9);

/// Common eigenbasis of a subspace certified as a MASA. Columns are sorted
/// lexicographically by their eigenvalue tuple under the Hermitian parts of
/// the subspace basis, and each column's first non-negligible entry is made
/// real positive.
Basis extract_basis(const OperatorSubspace& b, std::uint64_t seed = 0, double tol = 1e-9);

enum class CompletionStatus { Completed, WrongCount, NotMub, NumericalFailure };
std::string_view to_string(CompletionStatus s);

struct CompletionReport {
  CompletionStatus status = CompletionStatus::NumericalFailure;
  std::string message;
  bool input_ok = false;
  std::size_t vperp_dim = 0;
  std::optional<MasaReport> masa_report;
  std::optional<Basis> missing_basis;
  std::optional<VerifyReport> final_verify;
  std::map<std::string, double> residuals;

  bool ok() const noexcept { return status == CompletionStatus::Completed; }
};

/// Extends d mutually unbiased bases of C^d by the missing (d+1)-th basis:
/// validate, form V^perp, certify it as a MASA, diagonalize it, and re-verify
/// the full collection at c.tol. Failures are report states, not exceptions.
CompletionReport complete_collection(const MubCollection& c, std::uint64_t seed = 0);

/// The completed collection (inputs followed by the recovered basis); throws
/// NumericalFailure if the report is not a success.
MubCollection completed(const MubCollection& c, const CompletionReport& report);

}  // namespace mub

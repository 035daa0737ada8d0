#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "mub/error.hpp"

namespace mub {

using cdouble = std::complex<double>;

/// Dense square complex matrix, row-major.
///
/// std::complex<double> is layout-compatible with an interleaved (re, im)
/// pair of doubles, so data() can be handed to code expecting that layout.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::vector<cdouble> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix unit(std::size_t dim, std::size_t row, std::size_t col);
  static ComplexMatrix diagonal(std::span<const cdouble> values);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// Builds v v* for a column vector v.
  static ComplexMatrix outer(std::span<const cdouble> v);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return entries_.size(); }

  cdouble& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const cdouble& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  std::span<cdouble> data() noexcept { return entries_; }
  std::span<const cdouble> data() const noexcept { return entries_; }

  std::vector<cdouble> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const cdouble> v);

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  cdouble trace() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cdouble s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cdouble> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, cdouble s);
ComplexMatrix operator*(cdouble s, ComplexMatrix a);
/// Matrix product (parallel kernel).
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<cdouble> apply(const ComplexMatrix& m, std::span<const cdouble> v);

/// Hilbert-Schmidt scalar product Tr(a* b): conjugate-linear in a.
cdouble hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);
double hs_norm(const ComplexMatrix& a);
double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix hermitian_part(const ComplexMatrix& a);
/// (a - a*) / 2i, so that a = hermitian_part(a) + i * antihermitian_part(a).
ComplexMatrix antihermitian_part(const ComplexMatrix& a);

/// ||m* m - 1||_HS.
double unitarity_defect(const ComplexMatrix& m);

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b);

/// An orthonormal basis of C^d stored as the columns of a unitary matrix.
///
/// The plain constructor does not check unitarity so that verifiers can
/// inspect broken inputs; use checked() where the invariant must hold.
class Basis {
 public:
  Basis() = default;
  explicit Basis(ComplexMatrix m) : matrix_(std::move(m)) {}

  /// Throws NotUnitary when ||M*M - 1||_HS > tol * sqrt(d).
  static Basis checked(ComplexMatrix m, double tol = 1e-10);

  std::size_t dim() const noexcept { return matrix_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::vector<cdouble> vector(std::size_t j) const { return matrix_.column(j); }
  /// ||M*M - 1||_HS / sqrt(d)
  double unitarity_deviation() const;

 private:
  ComplexMatrix matrix_;
};

}  // namespace mub

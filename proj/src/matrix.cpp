#include "mub/matrix.hpp"

#include <cmath>
#include <string>

#include "mub/kernels.hpp"

namespace mub {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimError: return "DimError";
    case ErrorCode::InvalidSubspace: return "InvalidSubspace";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::DegenerateFamily: return "DegenerateFamily";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::InvalidMap: return "InvalidMap";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::NotFullOnb: return "NotFullOnb";
    case ErrorCode::InvalidMasa: return "InvalidMasa";
    case ErrorCode::WrongCount: return "WrongCount";
    case ErrorCode::NotMub: return "NotMub";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
  }
  return "Unknown";
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cdouble> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_)
    throw Error(ErrorCode::DimError, "expected " + std::to_string(dim_ * dim_) + " entries, got " +
                                         std::to_string(entries_.size()));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t dim, std::size_t row, std::size_t col) {
  ComplexMatrix m(dim);
  m(row, col) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cdouble> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cdouble> v) {
  ComplexMatrix m(v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * std::conj(v[c]);
  return m;
}

std::vector<cdouble> ComplexMatrix::column(std::size_t c) const {
  std::vector<cdouble> v(dim_);
  for (std::size_t r = 0; r < dim_; ++r) v[r] = (*this)(r, c);
  return v;
}

void ComplexMatrix::set_column(std::size_t c, std::span<const cdouble> v) {
  for (std::size_t r = 0; r < dim_; ++r) (*this)(r, c) = v[r];
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

cdouble ComplexMatrix::trace() const {
  cdouble t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& z : entries_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cdouble s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, cdouble s) { return a *= s; }
ComplexMatrix operator*(cdouble s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  ComplexMatrix c(a.dim());
  kernels::gemm(kernels::Exec::parallel, a.dim(), a.data(), b.data(), c.data());
  return c;
}

std::vector<cdouble> apply(const ComplexMatrix& m, std::span<const cdouble> v) {
  if (v.size() != m.dim()) throw Error(ErrorCode::DimError, "vector length does not match matrix");
  std::vector<cdouble> out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    cdouble s = 0.0;
    for (std::size_t c = 0; c < m.dim(); ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorCode::DimError,
                "dimension mismatch " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

cdouble hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  cdouble s = 0.0;
  const auto x = a.data();
  const auto y = b.data();
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double hs_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a.data()[i] - b.data()[i]);
  return std::sqrt(s);
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.dim(), m = b.dim();
  ComplexMatrix k(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const cdouble aij = a(i, j);
      if (aij == cdouble{}) continue;
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) k(i * m + r, j * m + c) = aij * b(r, c);
    }
  return k;
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) { return (a + a.adjoint()) * cdouble(0.5); }

ComplexMatrix antihermitian_part(const ComplexMatrix& a) {
  return (a - a.adjoint()) * cdouble(0.0, -0.5);
}

double unitarity_defect(const ComplexMatrix& m) {
  return hs_distance(m.adjoint() * m, ComplexMatrix::identity(m.dim()));
}

Basis Basis::checked(ComplexMatrix m, double tol) {
  Basis b(std::move(m));
  if (!b.matrix_.all_finite()) throw Error(ErrorCode::NotUnitary, "basis has non-finite entries");
  const double dev = b.unitarity_deviation();
  if (dev > tol)
    throw Error(ErrorCode::NotUnitary, "||M*M - 1||_HS / sqrt(d) = " + std::to_string(dev));
  return b;
}

double Basis::unitarity_deviation() const {
  return unitarity_defect(matrix_) / std::sqrt(static_cast<double>(dim()));
}

}  // namespace mub

#include "mub/kernels.hpp"

#include <cmath>
#include <cstdint>

namespace mub::kernels {
namespace {

// Shared per-entry bodies; the serial and parallel drivers call the same code.

inline void gemm_row(std::size_t n, std::size_t i, const cdouble* a, const cdouble* b,
                     cdouble* c) {
  cdouble* crow = c + i * n;
  for (std::size_t j = 0; j < n; ++j) crow[j] = 0.0;
  const cdouble* arow = a + i * n;
  for (std::size_t k = 0; k < n; ++k) {
    const cdouble aik = arow[k];
    if (aik == cdouble{}) continue;
    const cdouble* brow = b + k * n;
    for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
  }
}

inline cdouble dot_conj(std::span<const cdouble> x, std::span<const cdouble> y) {
  cdouble s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

inline void cholesky_row(std::size_t n, std::size_t i, std::size_t j, cdouble* a) {
  cdouble s = a[i * n + j];
  const cdouble* li = a + i * n;
  const cdouble* lj = a + j * n;
  for (std::size_t k = 0; k < j; ++k) s -= li[k] * std::conj(lj[k]);
  a[i * n + j] = s / a[j * n + j].real();
}

}  // namespace

void gemm(Exec exec, std::size_t n, std::span<const cdouble> a, std::span<const cdouble> b,
          std::span<cdouble> c) {
  const auto rows = static_cast<std::int64_t>(n);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static) if (n >= 32)
    for (std::int64_t i = 0; i < rows; ++i) gemm_row(n, i, a.data(), b.data(), c.data());
  } else {
    for (std::int64_t i = 0; i < rows; ++i) gemm_row(n, i, a.data(), b.data(), c.data());
  }
}

void project_coefficients(Exec exec, std::span<const std::vector<cdouble>> basis,
                          std::span<const cdouble> v, std::span<cdouble> coeffs) {
  const auto count = static_cast<std::int64_t>(basis.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static) if (basis.size() * v.size() >= 4096)
    for (std::int64_t k = 0; k < count; ++k) coeffs[k] = dot_conj(basis[k], v);
  } else {
    for (std::int64_t k = 0; k < count; ++k) coeffs[k] = dot_conj(basis[k], v);
  }
}

void subtract_combination(Exec exec, std::span<const std::vector<cdouble>> basis,
                          std::span<const cdouble> coeffs, std::span<cdouble> v) {
  const auto len = static_cast<std::int64_t>(v.size());
  auto body = [&](std::int64_t i) {
    cdouble s = 0.0;
    for (std::size_t k = 0; k < basis.size(); ++k) s += coeffs[k] * basis[k][i];
    v[i] -= s;
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static) if (basis.size() * v.size() >= 4096)
    for (std::int64_t i = 0; i < len; ++i) body(i);
  } else {
    for (std::int64_t i = 0; i < len; ++i) body(i);
  }
}

bool cholesky(Exec exec, std::size_t n, std::span<cdouble> a, double shift) {
  cdouble* m = a.data();
  for (std::size_t j = 0; j < n; ++j) {
    double pivot = m[j * n + j].real() + shift;
    for (std::size_t k = 0; k < j; ++k) pivot -= std::norm(m[j * n + k]);
    if (!(pivot > 0.0)) return false;
    m[j * n + j] = std::sqrt(pivot);

    const auto first = static_cast<std::int64_t>(j + 1);
    const auto last = static_cast<std::int64_t>(n);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static) if ((n - j) * j >= 8192)
      for (std::int64_t i = first; i < last; ++i) cholesky_row(n, i, j, m);
    } else {
      for (std::int64_t i = first; i < last; ++i) cholesky_row(n, i, j, m);
    }
  }
  return true;
}

}  // namespace mub::kernels

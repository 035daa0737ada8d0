#include "mub/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace mub {
namespace {

constexpr int kMaxSweeps = 100;

void check_hermitian(const ComplexMatrix& h) {
  if (!h.all_finite()) throw Error(ErrorCode::NotHermitian, "matrix has non-finite entries");
  const double norm = hs_norm(h);
  const double skew = hs_distance(h, h.adjoint());
  if (skew > 1e-10 * (1.0 + norm))
    throw Error(ErrorCode::NotHermitian, "||h - h*||_HS = " + std::to_string(skew));
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Diagonalizes a in place; accumulates the rotations into v when given.
void jacobi(ComplexMatrix& a, ComplexMatrix* v) {
  const std::size_t n = a.dim();
  const double stop = 1e-13 * hs_norm(a);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cdouble apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        // J = diag(1, conj(e)) R diag(1, e) with R the real rotation that
        // zeroes the (p, q) entry of the phase-rotated 2x2 block.
        const cdouble e = apq / mag;
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cdouble se = s * e;
        const cdouble sec = s * std::conj(e);

        // a <- a J
        for (std::size_t k = 0; k < n; ++k) {
          const cdouble akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sec * akq;
          a(k, q) = se * akp + c * akq;
        }
        // a <- J* a
        for (std::size_t k = 0; k < n; ++k) {
          const cdouble apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - se * aqk;
          a(q, k) = sec * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        if (v != nullptr) {
          for (std::size_t k = 0; k < n; ++k) {
            const cdouble vkp = (*v)(k, p), vkq = (*v)(k, q);
            (*v)(k, p) = c * vkp - sec * vkq;
            (*v)(k, q) = se * vkp + c * vkq;
          }
        }
      }
    }
  }
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& h) {
  check_hermitian(h);
  const std::size_t n = h.dim();
  ComplexMatrix a = hermitian_part(h);
  ComplexMatrix v = ComplexMatrix::identity(n);
  jacobi(a, &v);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigResult out;
  out.values.resize(n);
  ComplexMatrix sorted(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]).real();
    for (std::size_t r = 0; r < n; ++r) sorted(r, j) = v(r, order[j]);
  }
  out.vectors = Basis(std::move(sorted));
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  check_hermitian(h);
  ComplexMatrix a = hermitian_part(h);
  jacobi(a, nullptr);
  std::vector<double> values(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) values[i] = a(i, i).real();
  std::sort(values.begin(), values.end());
  return values;
}

bool is_psd(const ComplexMatrix& h, double threshold, kernels::Exec exec) {
  check_hermitian(h);
  std::vector<cdouble> work(h.data().begin(), h.data().end());
  return kernels::cholesky(exec, h.dim(), work, threshold);
}

}  // namespace mub

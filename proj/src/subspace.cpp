#include "mub/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mub/kernels.hpp"

namespace mub {
namespace {

using Flat = std::vector<cdouble>;
using kernels::Exec;

std::vector<cdouble> flatten(const ComplexMatrix& m) { return {m.data().begin(), m.data().end()}; }

double norm(std::span<const cdouble> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

// Two rounds of classical Gram-Schmidt against q; returns the residual norm.
double orthogonalize(const std::vector<Flat>& q, Flat& v) {
  std::vector<cdouble> coeffs(q.size());
  for (int pass = 0; pass < 2; ++pass) {
    kernels::project_coefficients(Exec::parallel, q, v, coeffs);
    kernels::subtract_combination(Exec::parallel, q, coeffs, v);
  }
  return norm(v);
}

ComplexMatrix unflatten(std::size_t dim, Flat v) { return ComplexMatrix(dim, std::move(v)); }

}  // namespace

OperatorSubspace::OperatorSubspace(std::size_t dim, std::vector<ComplexMatrix> onb)
    : dim_(dim), onb_(std::move(onb)) {
  if (onb_.size() > dim_ * dim_)
    throw Error(ErrorCode::InvalidSubspace, "more than d^2 basis elements");
  for (const auto& b : onb_)
    if (b.dim() != dim_) throw Error(ErrorCode::DimError, "basis element has wrong dimension");
}

ComplexMatrix OperatorSubspace::project(const ComplexMatrix& x) const {
  if (x.dim() != dim_) throw Error(ErrorCode::DimError, "projecting matrix of wrong dimension");
  ComplexMatrix out(dim_);
  for (const auto& b : onb_) {
    const cdouble c = hs_inner(b, x);
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] += c * b.data()[i];
  }
  return out;
}

double OperatorSubspace::distance_to(const ComplexMatrix& x) const {
  return hs_distance(x, project(x));
}

double OperatorSubspace::gram_deviation() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < onb_.size(); ++i)
    for (std::size_t j = i; j < onb_.size(); ++j) {
      const cdouble g = hs_inner(onb_[i], onb_[j]) - (i == j ? 1.0 : 0.0);
      worst = std::max(worst, std::abs(g));
    }
  return worst;
}

OperatorSubspace gram_schmidt(std::span<const ComplexMatrix> vectors, double tol) {
  if (vectors.empty()) return OperatorSubspace{};
  return gram_schmidt(vectors.front().dim(), vectors, tol);
}

OperatorSubspace gram_schmidt(std::size_t dim, std::span<const ComplexMatrix> vectors,
                              double tol) {
  std::vector<Flat> q;
  for (const auto& m : vectors) {
    if (m.dim() != dim) throw Error(ErrorCode::DimError, "gram_schmidt inputs differ in dimension");
    Flat v = flatten(m);
    const double r = orthogonalize(q, v);
    if (r < tol) continue;
    for (auto& z : v) z /= r;
    q.push_back(std::move(v));
  }
  std::vector<ComplexMatrix> onb;
  onb.reserve(q.size());
  for (auto& v : q) onb.push_back(unflatten(dim, std::move(v)));
  return OperatorSubspace(dim, std::move(onb));
}

OperatorSubspace orthogonal_complement(const OperatorSubspace& sub, double ortho_tol) {
  const std::size_t d = sub.dim();
  const std::size_t n = d * d;
  const double dev = sub.gram_deviation();
  if (dev > ortho_tol)
    throw Error(ErrorCode::InvalidSubspace,
                "input is not orthonormal (Gram deviation " + std::to_string(dev) + ")");

  std::vector<Flat> q;
  q.reserve(n);
  // weight[u] = sum_k |q_k[u]|^2, so the residual of matrix unit u is 1 - weight[u].
  std::vector<double> weight(n, 0.0);
  auto absorb = [&](const Flat& v) {
    for (std::size_t u = 0; u < n; ++u) weight[u] += std::norm(v[u]);
  };
  for (const auto& b : sub.onb()) {
    q.push_back(flatten(b));
    absorb(q.back());
  }

  std::vector<ComplexMatrix> out;
  std::vector<bool> used(n, false);
  const std::size_t wanted = n - sub.size();
  while (out.size() < wanted) {
    std::size_t best = n;
    double best_residual = -1.0;
    for (std::size_t u = 0; u < n; ++u) {
      if (used[u]) continue;
      const double r = 1.0 - weight[u];
      if (r > best_residual) {
        best_residual = r;
        best = u;
      }
    }
    if (best == n) throw Error(ErrorCode::InvalidSubspace, "ran out of matrix-unit candidates");
    used[best] = true;

    Flat v(n, 0.0);
    v[best] = 1.0;
    const double r = orthogonalize(q, v);
    if (r < 1e-8) throw Error(ErrorCode::InvalidSubspace, "complement extension lost rank");
    for (auto& z : v) z /= r;
    absorb(v);
    q.push_back(v);
    out.push_back(unflatten(d, std::move(v)));
  }
  return OperatorSubspace(d, std::move(out));
}

ComplexMatrix span_projector(const OperatorSubspace& sub) {
  const std::size_t n = sub.dim() * sub.dim();
  ComplexMatrix p(n);
  for (const auto& b : sub.onb()) {
    const auto v = b.data();
    for (std::size_t r = 0; r < n; ++r) {
      if (v[r] == cdouble{}) continue;
      for (std::size_t c = 0; c < n; ++c) p(r, c) += v[r] * std::conj(v[c]);
    }
  }
  return p;
}

double subspace_distance(const OperatorSubspace& a, const OperatorSubspace& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimError, "subspaces live in different M_d");
  return hs_distance(span_projector(a), span_projector(b));
}

}  // namespace mub

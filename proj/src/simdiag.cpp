#include "mub/simdiag.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "mub/eigen.hpp"
#include "mub/random.hpp"

namespace mub {
namespace {

constexpr int kMaxDraws = 8;

double offdiag(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Columns [first, first + count) of u as a (dim x count) block, returned as the
// list of its column vectors.
std::vector<std::vector<cdouble>> columns(const ComplexMatrix& u, std::size_t first,
                                          std::size_t count) {
  std::vector<std::vector<cdouble>> cols;
  for (std::size_t j = first; j < first + count; ++j) cols.push_back(u.column(j));
  return cols;
}

// Q* A Q for Q given by its columns.
ComplexMatrix restrict_to(const ComplexMatrix& a, const std::vector<std::vector<cdouble>>& q) {
  const std::size_t k = q.size();
  ComplexMatrix out(k);
  std::vector<std::vector<cdouble>> aq;
  aq.reserve(k);
  for (const auto& col : q) aq.push_back(mub::apply(a, col));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      cdouble s = 0.0;
      for (std::size_t r = 0; r < a.dim(); ++r) s += std::conj(q[i][r]) * aq[j][r];
      out(i, j) = s;
    }
  return out;
}

bool is_scalar(const ComplexMatrix& a, double tol) {
  const cdouble mean = a.trace() / static_cast<double>(a.dim());
  return hs_distance(a, ComplexMatrix::identity(a.dim()) * mean) <= tol * (1.0 + hs_norm(a));
}

// parts are Hermitian; returns a unitary diagonalizing all of them, or nothing
// after kMaxDraws failed draws.
std::optional<ComplexMatrix> diagonalize_block(const std::vector<ComplexMatrix>& parts, Rng& rng,
                                               double tol) {
  const std::size_t n = parts.front().dim();
  if (n == 1) return ComplexMatrix::identity(1);

  // Parts at noise level (e.g. the anti-Hermitian half of a Hermitian member)
  // would be blown up by the normalization below, so they take no part.
  double scale = 0.0;
  for (const auto& p : parts) scale = std::max(scale, hs_norm(p));
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    ComplexMatrix g(n);
    for (const auto& p : parts) {
      const double pn = hs_norm(p);
      if (pn <= tol * (1.0 + scale)) continue;
      g += p * cdouble(random_normal(rng) / pn);
    }
    const EigResult eig = hermitian_eig(g);
    ComplexMatrix u = eig.vectors.matrix();
    const double gap = 1e-7 * (1.0 + hs_norm(g));

    bool ok = true;
    std::size_t start = 0;
    while (start < n && ok) {
      std::size_t end = start + 1;
      while (end < n && eig.values[end] - eig.values[end - 1] <= gap) ++end;
      const std::size_t k = end - start;
      if (k > 1) {
        const auto q = columns(u, start, k);
        std::vector<ComplexMatrix> restricted;
        bool all_scalar = true;
        for (const auto& p : parts) {
          restricted.push_back(restrict_to(p, q));
          all_scalar = all_scalar && is_scalar(restricted.back(), tol);
        }
        if (!all_scalar) {
          auto w = diagonalize_block(restricted, rng, tol);
          if (!w) {
            ok = false;
            break;
          }
          for (std::size_t j = 0; j < k; ++j)
            for (std::size_t r = 0; r < n; ++r) {
              cdouble s = 0.0;
              for (std::size_t i = 0; i < k; ++i) s += q[i][r] * (*w)(i, j);
              u(r, start + j) = s;
            }
        }
      }
      start = end;
    }
    if (!ok) continue;

    const ComplexMatrix ua = u.adjoint();
    bool diagonal = true;
    for (const auto& p : parts)
      diagonal = diagonal && offdiag(ua * p * u) <= tol * (1.0 + hs_norm(p));
    if (diagonal) return u;
  }
  return std::nullopt;
}

}  // namespace

double max_offdiagonal_residual(std::span<const ComplexMatrix> family, const ComplexMatrix& u) {
  const ComplexMatrix ua = u.adjoint();
  double worst = 0.0;
  for (const auto& a : family) worst = std::max(worst, offdiag(ua * a * u) / (1.0 + hs_norm(a)));
  return worst;
}

Basis simultaneous_diagonalize(std::span<const ComplexMatrix> family, std::uint64_t seed,
                               double tol) {
  if (family.empty()) throw Error(ErrorCode::DegenerateFamily, "empty family");
  const std::size_t n = family.front().dim();
  for (const auto& a : family) require_same_dim(a, family.front());

  for (std::size_t i = 0; i < family.size(); ++i) {
    const double ni = hs_norm(family[i]);
    const double self = hs_norm(commutator(family[i], family[i].adjoint()));
    if (self > tol * (1.0 + ni * ni))
      throw Error(ErrorCode::NotCommuting, "member " + std::to_string(i) +
                                               " is not normal, ||[A, A*]|| = " +
                                               std::to_string(self));
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const double c = hs_norm(commutator(family[i], family[j]));
      if (c > tol * (1.0 + ni * hs_norm(family[j])))
        throw Error(ErrorCode::NotCommuting, "members " + std::to_string(i) + " and " +
                                                 std::to_string(j) + ", ||[A, B]|| = " +
                                                 std::to_string(c));
    }
  }

  std::vector<ComplexMatrix> parts;
  for (const auto& a : family) {
    parts.push_back(hermitian_part(a));
    parts.push_back(antihermitian_part(a));
  }

  Rng rng(seed);
  auto u = diagonalize_block(parts, rng, tol);
  if (!u)
    throw Error(ErrorCode::DegenerateFamily,
                "no common eigenbasis found after " + std::to_string(kMaxDraws) +
                    " draws in dimension " + std::to_string(n));
  return Basis(std::move(*u));
}

}  // namespace mub

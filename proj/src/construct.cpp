#include "mub/construct.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace mub {

double unbiased_deviation(const Basis& e, const Basis& f) {
  require_same_dim(e.matrix(), f.matrix());
  const double sd = std::sqrt(static_cast<double>(e.dim()));
  const ComplexMatrix overlaps = e.matrix().adjoint() * f.matrix();
  double worst = 0.0;
  for (const auto& z : overlaps.data()) worst = std::max(worst, std::abs(std::abs(z) * sd - 1.0));
  return worst;
}

VerifyReport verify_collection(const MubCollection& c) {
  VerifyReport r;
  r.basis_count = c.bases.size();
  r.within_count_bound = r.basis_count <= c.dim + 1;
  bool shapes_ok = true;
  for (const auto& b : c.bases) {
    if (b.dim() != c.dim || !b.matrix().all_finite()) {
      shapes_ok = false;
      r.max_unitarity_dev = INFINITY;
      continue;
    }
    r.max_unitarity_dev = std::max(r.max_unitarity_dev, b.unitarity_deviation());
  }
  if (shapes_ok) {
    for (std::size_t i = 0; i < c.bases.size(); ++i)
      for (std::size_t j = i + 1; j < c.bases.size(); ++j) {
        const double dev = unbiased_deviation(c.bases[i], c.bases[j]);
        ++r.pair_count;
        if (dev > r.max_unbiased_dev || r.pair_count == 1) {
          r.max_unbiased_dev = std::max(r.max_unbiased_dev, dev);
          r.worst_pair = {i, j};
        }
      }
  }
  r.pass = shapes_ok && r.within_count_bound && r.max_unbiased_dev <= c.tol &&
           r.max_unitarity_dev <= c.tol;
  return r;
}

std::pair<Basis, Basis> standard_and_fourier(std::size_t d) {
  ComplexMatrix f(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % d) / d;
      f(j, k) = std::polar(scale, angle);
    }
  return {Basis(ComplexMatrix::identity(d)), Basis(std::move(f))};
}

namespace {

// w^k for k in [0, n), with w^0 exactly 1.
std::vector<cdouble> roots_of_unity(std::uint64_t n) {
  std::vector<cdouble> w(n);
  for (std::uint64_t k = 0; k < n; ++k)
    w[k] = k == 0 ? cdouble(1.0) : std::polar(1.0, 2.0 * std::numbers::pi * double(k) / double(n));
  return w;
}

ComplexMatrix odd_basis(const std::vector<FieldElement>& elems, const FieldElement& a,
                        const std::vector<cdouble>& omega) {
  const std::size_t q = elems.size();
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));
  ComplexMatrix m(q);
  for (std::size_t xi = 0; xi < q; ++xi) {
    const FieldElement& x = elems[xi];
    const FieldElement ax2 = a * x * x;
    for (std::size_t bi = 0; bi < q; ++bi) m(xi, bi) = omega[gf_trace(ax2 + elems[bi] * x)] * scale;
  }
  return m;
}

ComplexMatrix even_basis(const std::vector<FieldElement>& elems, const FieldElement& a) {
  static const cdouble kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::size_t q = elems.size();
  const unsigned m = a.spec().alpha();
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));

  // Polynomial basis 1, x, ..., x^(m-1) and the trace form S_ij = tr(a b_i b_j).
  std::vector<FieldElement> beta;
  for (unsigned i = 0; i < m; ++i) beta.push_back(FieldElement::from_index(a.spec_ptr(), 1ULL << i));
  std::vector<std::vector<unsigned>> s(m, std::vector<unsigned>(m));
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) s[i][j] = static_cast<unsigned>(gf_trace(a * beta[i] * beta[j]));

  ComplexMatrix out(q);
  for (std::size_t xi = 0; xi < q; ++xi) {
    const auto& x = elems[xi].coeffs();
    unsigned quad = 0;
    for (unsigned i = 0; i < m; ++i) {
      if (x[i] == 0) continue;
      quad += s[i][i];
      for (unsigned j = i + 1; j < m; ++j) quad += 2 * s[i][j] * static_cast<unsigned>(x[j]);
    }
    for (std::size_t bi = 0; bi < q; ++bi) {
      const unsigned lin = static_cast<unsigned>(gf_trace(elems[bi] * elems[xi]));
      out(xi, bi) = kI[(quad + 2 * lin) % 4] * scale;
    }
  }
  return out;
}

}  // namespace

MubCollection construct_complete_mub(std::size_t d, std::shared_ptr<const FieldSpec> field_override) {
  if (d < 2 || d > 64)
    throw Error(ErrorCode::Unsupported, "dimension " + std::to_string(d) + " outside 2..64");
  const auto pp = prime_power(d);
  if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(d) + " is not a prime power");
  const auto [p, alpha] = *pp;

  auto field = field_override ? field_override : FieldSpec::standard(p, alpha);
  if (field->order() != d)
    throw Error(ErrorCode::InvalidField, "field order " + std::to_string(field->order()) +
                                             " does not match dimension " + std::to_string(d));

  std::vector<FieldElement> elems;
  elems.reserve(d);
  for (std::uint64_t i = 0; i < d; ++i) elems.push_back(FieldElement::from_index(field, i));

  MubCollection c;
  c.dim = d;
  c.tol = 1e-10;
  c.bases.emplace_back(ComplexMatrix::identity(d));
  const auto omega = roots_of_unity(p);
  for (const auto& a : elems)
    c.bases.emplace_back(p == 2 ? even_basis(elems, a) : odd_basis(elems, a, omega));
  return c;
}

}  // namespace mub

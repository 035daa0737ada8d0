#include "mub/operator_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mub/eigen.hpp"
#include "mub/random.hpp"

namespace mub {

Masa masa_from_basis(const Basis& e, double tol) {
  Masa m{Basis::checked(e.matrix(), tol), {}, {}};
  const std::size_t d = e.dim();
  m.projections.reserve(d);
  for (std::size_t j = 0; j < d; ++j) m.projections.push_back(ComplexMatrix::outer(e.vector(j)));
  m.onb = gram_schmidt(d, m.projections, 1e-12);
  if (m.onb.size() != d)
    throw Error(ErrorCode::InvalidMasa, "projections span " + std::to_string(m.onb.size()) +
                                            " dimensions, expected " + std::to_string(d));
  return m;
}

double masa_defect(const Masa& m) {
  const std::size_t d = m.dim();
  double worst = 0.0;
  ComplexMatrix sum(d);
  for (std::size_t i = 0; i < m.projections.size(); ++i) {
    const auto& p = m.projections[i];
    worst = std::max(worst, hs_distance(p, p.adjoint()));
    worst = std::max(worst, hs_distance(p * p, p));
    worst = std::max(worst, std::abs(p.trace() - 1.0));
    for (std::size_t j = i + 1; j < m.projections.size(); ++j)
      worst = std::max(worst, hs_norm(p * m.projections[j]));
    sum += p;
  }
  return std::max(worst, hs_distance(sum, ComplexMatrix::identity(d)));
}

ComplexMatrix cond_expect(const Masa& m, const ComplexMatrix& x) {
  require_same_dim(m.basis.matrix(), x);
  ComplexMatrix out(x.dim());
  for (const auto& p : m.projections) out += p * x * p;
  return out;
}

ComplexMatrix cond_expect_kraus(const Masa& m, const ComplexMatrix& x) {
  require_same_dim(m.basis.matrix(), x);
  ComplexMatrix out(x.dim());
  for (const auto& a : m.onb.onb()) out += a.adjoint() * x * a;
  return out;
}

OrthogonalityReport masas_orthogonal(const Masa& a, const Masa& b, double tol) {
  require_same_dim(a.basis.matrix(), b.basis.matrix());
  const double d = static_cast<double>(a.dim());
  OrthogonalityReport r;

  // Trace route: tau(PQ) against tau(P) tau(Q) on the projections.
  for (const auto& p : a.projections) {
    const double tau_p = p.trace().real() / d;
    for (const auto& q : b.projections) {
      const double tau_q = q.trace().real() / d;
      const double tau_pq = std::max(0.0, (p * q).trace().real() / d);
      r.trace_deviation =
          std::max(r.trace_deviation, std::abs(std::sqrt(tau_pq / (tau_p * tau_q)) - 1.0));
    }
  }

  // Overlap route: |<e_k, f_j>| sqrt(d) on the vectors.
  const ComplexMatrix overlaps = a.basis.matrix().adjoint() * b.basis.matrix();
  for (const auto& z : overlaps.data())
    r.overlap_deviation = std::max(r.overlap_deviation, std::abs(std::abs(z) * std::sqrt(d) - 1.0));

  r.orthogonal = r.trace_deviation <= tol;
  r.unbiased = r.overlap_deviation <= tol;
  return r;
}

ComplexMatrix onb_conjugation_sum(const OperatorSubspace& onb, const ComplexMatrix& x) {
  const std::size_t d = x.dim();
  if (onb.dim() != d) throw Error(ErrorCode::DimError, "basis and X live in different M_d");
  if (onb.size() != d * d)
    throw Error(ErrorCode::NotFullOnb,
                "expected " + std::to_string(d * d) + " elements, got " + std::to_string(onb.size()));
  if (onb.gram_deviation() > 1e-9) throw Error(ErrorCode::NotFullOnb, "basis is not orthonormal");
  ComplexMatrix out(d);
  for (const auto& a : onb.onb()) out += a.adjoint() * x * a;
  return out;
}

LinearMapOnMatrices LinearMapOnMatrices::from_kraus(std::size_t dim,
                                                    std::vector<ComplexMatrix> kraus) {
  for (const auto& k : kraus)
    if (k.dim() != dim) throw Error(ErrorCode::InvalidMap, "Kraus operator has wrong dimension");
  LinearMapOnMatrices m(dim);
  m.kraus_ = std::move(kraus);
  return m;
}

LinearMapOnMatrices LinearMapOnMatrices::from_matrix_form(std::size_t dim,
                                                          ComplexMatrix matrix_form) {
  if (matrix_form.dim() != dim * dim)
    throw Error(ErrorCode::InvalidMap, "matrix form must be d^2 x d^2");
  if (!matrix_form.all_finite()) throw Error(ErrorCode::InvalidMap, "matrix form is not finite");
  LinearMapOnMatrices m(dim);
  m.matrix_form_ = std::move(matrix_form);
  return m;
}

LinearMapOnMatrices LinearMapOnMatrices::projection_onto(const OperatorSubspace& sub) {
  const std::size_t d = sub.dim();
  ComplexMatrix form(d * d);
  for (std::size_t u = 0; u < d * d; ++u) {
    const ComplexMatrix image = sub.project(ComplexMatrix::unit(d, u / d, u % d));
    for (std::size_t r = 0; r < d * d; ++r) form(r, u) = image.data()[r];
  }
  return from_matrix_form(d, std::move(form));
}

LinearMapOnMatrices LinearMapOnMatrices::transpose_map(std::size_t dim) {
  ComplexMatrix form(dim * dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) form(r * dim + c, c * dim + r) = 1.0;
  return from_matrix_form(dim, std::move(form));
}

LinearMapOnMatrices LinearMapOnMatrices::with_kraus(std::vector<ComplexMatrix> kraus,
                                                    double tol) const {
  LinearMapOnMatrices m = *this;
  m.kraus_ = from_kraus(dim_, std::move(kraus)).kraus_;
  if (m.matrix_form_) {
    const double gap = m.form_disagreement();
    if (gap > tol)
      throw Error(ErrorCode::InvalidMap,
                  "Kraus and matrix forms disagree by " + std::to_string(gap));
  }
  return m;
}

ComplexMatrix LinearMapOnMatrices::apply(const ComplexMatrix& x) const {
  if (x.dim() != dim_) throw Error(ErrorCode::DimError, "map applied to wrong dimension");
  if (!matrix_form_) return apply_kraus(x);
  return ComplexMatrix(dim_, mub::apply(*matrix_form_, x.data()));
}

ComplexMatrix LinearMapOnMatrices::apply_kraus(const ComplexMatrix& x) const {
  if (!kraus_) throw Error(ErrorCode::InvalidMap, "map has no Kraus form");
  if (x.dim() != dim_) throw Error(ErrorCode::DimError, "map applied to wrong dimension");
  ComplexMatrix out(dim_);
  for (const auto& b : *kraus_) out += b.adjoint() * x * b;
  return out;
}

double LinearMapOnMatrices::form_disagreement() const {
  if (!kraus_ || !matrix_form_) throw Error(ErrorCode::InvalidMap, "map lacks one of its forms");
  double worst = 0.0;
  for (std::size_t u = 0; u < dim_ * dim_; ++u) {
    const auto e = ComplexMatrix::unit(dim_, u / dim_, u % dim_);
    worst = std::max(worst, hs_distance(apply_kraus(e), apply(e)));
  }
  return worst;
}

ComplexMatrix choi_matrix(const LinearMapOnMatrices& map, std::size_t amplification) {
  const std::size_t d = map.dim();
  const std::size_t n = amplification;
  if (d == 0 || n == 0) throw Error(ErrorCode::InvalidMap, "empty map or zero amplification");
  if (!map.kraus() && !map.matrix_form()) throw Error(ErrorCode::InvalidMap, "map has no form");

  // (id_n (x) map)(E_ab (x) E_ij) = E_ab (x) map(E_ij); only d^2 images needed.
  std::vector<ComplexMatrix> images;
  images.reserve(d * d);
  for (std::size_t u = 0; u < d * d; ++u)
    images.push_back(map.apply(ComplexMatrix::unit(d, u / d, u % d)));

  const std::size_t m = n * d;  // amplified dimension
  ComplexMatrix choi(m * m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t j = 0; j < d; ++j) {
          const std::size_t row_block = a * d + i;
          const std::size_t col_block = b * d + j;
          const ComplexMatrix& img = images[i * d + j];
          for (std::size_t k = 0; k < d; ++k)
            for (std::size_t l = 0; l < d; ++l)
              choi(row_block * m + a * d + k, col_block * m + b * d + l) = img(k, l);
        }
  return choi;
}

PositivityReport is_k_positive(const LinearMapOnMatrices& map, std::size_t n,
                               double rel_threshold, std::size_t eig_limit) {
  const ComplexMatrix c = choi_matrix(map, n);
  PositivityReport r;
  r.choi_norm = hs_norm(c);
  r.threshold = rel_threshold * r.choi_norm;
  r.psd = is_psd(c, r.threshold);
  if (c.dim() <= eig_limit) r.min_eigenvalue = hermitian_eigenvalues(c).front();
  return r;
}

std::string_view to_string(SubalgebraVerdict v) {
  switch (v) {
    case SubalgebraVerdict::Subalgebra: return "subalgebra";
    case SubalgebraVerdict::NotSubalgebra: return "not-subalgebra";
    case SubalgebraVerdict::Disagreement: return "disagreement";
  }
  return "unknown";
}

std::string_view to_string(MasaStage s) {
  switch (s) {
    case MasaStage::Passed: return "passed";
    case MasaStage::Dimension: return "dimension";
    case MasaStage::ContainsUnit: return "contains-unit";
    case MasaStage::SelfAdjoint: return "self-adjoint";
    case MasaStage::Subalgebra: return "subalgebra";
    case MasaStage::Abelian: return "abelian";
  }
  return "unknown";
}

namespace {

double unit_residual(const OperatorSubspace& k) {
  const double d = static_cast<double>(k.dim());
  return k.distance_to(ComplexMatrix::identity(k.dim()) * cdouble(1.0 / std::sqrt(d)));
}

double adjoint_residual(const OperatorSubspace& k) {
  double worst = 0.0;
  for (const auto& b : k.onb()) worst = std::max(worst, k.distance_to(b.adjoint()));
  return worst;
}

}  // namespace

SubalgebraReport is_subalgebra(const OperatorSubspace& k, double tol, std::uint64_t seed) {
  const std::size_t d = k.dim();
  if (k.empty() || unit_residual(k) > tol)
    throw Error(ErrorCode::HypothesisFailed, "subspace does not contain the identity");
  if (adjoint_residual(k) > tol)
    throw Error(ErrorCode::HypothesisFailed, "subspace is not closed under adjoint");

  SubalgebraReport r;
  const auto ek = LinearMapOnMatrices::projection_onto(k);

  r.positivity = is_k_positive(ek, 2);

  for (const auto& bi : k.onb())
    for (const auto& bj : k.onb())
      r.closure_residual = std::max(r.closure_residual, k.distance_to(bi * bj));
  r.closed = r.closure_residual <= tol;

  constexpr int kSamples = 8;
  Rng rng(seed);
  r.schwarz_min_eigenvalue = 0.0;
  bool inequality = true;
  for (int s = 0; s < kSamples; ++s) {
    ComplexMatrix x = random_ginibre(d, rng);
    x *= cdouble(1.0 / hs_norm(x));
    const ComplexMatrix ex = ek.apply(x);
    const ComplexMatrix gap = hermitian_part(ek.apply(x.adjoint() * x) - ek.apply(x.adjoint()) * ex);
    const double lo = hermitian_eigenvalues(gap).front();
    r.schwarz_min_eigenvalue = s == 0 ? lo : std::min(r.schwarz_min_eigenvalue, lo);
    inequality = inequality && lo >= -tol * 2.0;
  }
  for (int s = 0; s < kSamples; ++s) {
    ComplexMatrix x(d);
    for (const auto& b : k.onb()) x += b * cdouble(random_normal(rng), random_normal(rng));
    x *= cdouble(1.0 / hs_norm(x));
    const ComplexMatrix xx = x.adjoint() * x;
    r.multiplicative_defect = std::max(r.multiplicative_defect, hs_distance(ek.apply(xx), xx));
  }
  r.schwarz_holds = inequality && r.multiplicative_defect <= tol * 2.0;

  const bool pos = r.positivity.psd;
  if (pos == r.closed && r.closed == r.schwarz_holds)
    r.verdict = pos ? SubalgebraVerdict::Subalgebra : SubalgebraVerdict::NotSubalgebra;
  else
    r.verdict = SubalgebraVerdict::Disagreement;
  return r;
}

MasaReport verify_masa(const OperatorSubspace& k, double tol, std::uint64_t seed) {
  MasaReport r;
  const std::size_t d = k.dim();
  r.dimension = k.size();
  auto fail = [&](MasaStage s) {
    r.failed_at = s;
    r.passed = false;
    return r;
  };

  if (r.dimension != d) return fail(MasaStage::Dimension);
  r.unit_residual = unit_residual(k);
  if (r.unit_residual > tol) return fail(MasaStage::ContainsUnit);
  r.adjoint_residual = adjoint_residual(k);
  if (r.adjoint_residual > tol) return fail(MasaStage::SelfAdjoint);
  r.subalgebra = is_subalgebra(k, tol, seed);
  if (r.subalgebra->verdict != SubalgebraVerdict::Subalgebra) return fail(MasaStage::Subalgebra);
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j)
      r.max_commutator = std::max(r.max_commutator, hs_norm(commutator(k[i], k[j])));
  if (r.max_commutator > tol) return fail(MasaStage::Abelian);

  r.passed = true;
  r.failed_at = MasaStage::Passed;
  return r;
}

}  // namespace mub

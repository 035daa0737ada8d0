#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "mub/construct.hpp"
#include "mub/eigen.hpp"
#include "mub/operator_space.hpp"
#include "mub/random.hpp"

using namespace mub;
using namespace mub::test;

namespace {

Masa random_masa(std::size_t d, Rng& rng) { return masa_from_basis(Basis(random_unitary(d, rng))); }

OperatorSubspace diagonal_subspace(std::size_t d) {
  std::vector<ComplexMatrix> units;
  for (std::size_t i = 0; i < d; ++i) units.push_back(ComplexMatrix::unit(d, i, i));
  return span_of(units);
}

OperatorSubspace full_space(std::size_t d) {
  std::vector<ComplexMatrix> units;
  for (std::size_t u = 0; u < d * d; ++u) units.push_back(ComplexMatrix::unit(d, u / d, u % d));
  return span_of(units);
}

}  // namespace

TEST_CASE("masa_from_basis on the standard basis") {
  const auto m = masa_from_basis(Basis(ComplexMatrix::identity(3)));
  for (std::size_t j = 0; j < 3; ++j) CHECK(m.projections[j] == ComplexMatrix::unit(3, j, j));
  CHECK(m.onb.size() == 3);
  CHECK(masa_defect(m) < 1e-15);
}

TEST_CASE("projections of any basis sum to the identity") {
  Rng rng(61);
  for (std::size_t d : {2u, 5u, 9u}) {
    const auto m = random_masa(d, rng);
    ComplexMatrix sum(d);
    for (const auto& p : m.projections) sum += p;
    CHECK(hs_distance(sum, ComplexMatrix::identity(d)) < 1e-12);
    CHECK(masa_defect(m) < 1e-12);
  }
}

TEST_CASE("Fourier MASA in d = 2 is span{1, sigma_x}") {
  const auto m = masa_from_basis(standard_and_fourier(2).second);
  CHECK(subspace_distance(m.onb, span_of({ComplexMatrix::identity(2), sigma_x()})) < 1e-14);
}

TEST_CASE("masa_from_basis rejects a non-unitary matrix") {
  try {
    masa_from_basis(Basis(ComplexMatrix(2, {1.0, 1.0, 0.0, 1.0})));
    FAIL("expected NotUnitary");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnitary);
  }
}

TEST_CASE("conditional expectation onto the diagonal is the pinching") {
  Rng rng(67);
  const auto m = masa_from_basis(Basis(ComplexMatrix::identity(4)));
  const auto x = random_ginibre(4, rng);
  const auto e = cond_expect(m, x);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(e(r, c) == (r == c ? x(r, c) : cdouble(0.0)));
  CHECK(hs_distance(cond_expect(m, ComplexMatrix::identity(4)), ComplexMatrix::identity(4)) < 1e-15);
}

TEST_CASE("property: pinching and Kraus forms agree; E is a trace-preserving HS projection") {
  Rng rng(71);
  for (std::size_t d = 2; d <= 6; ++d)
    for (int trial = 0; trial < 10; ++trial) {
      const auto m = random_masa(d, rng);
      const auto x = random_ginibre(d, rng), y = random_ginibre(d, rng);
      const auto ex = cond_expect(m, x);
      CHECK(hs_distance(ex, cond_expect_kraus(m, x)) < 1e-12);
      CHECK(hs_distance(cond_expect(m, ex), ex) < 1e-10);
      CHECK(std::abs(hs_inner(ex, y) - hs_inner(x, cond_expect(m, y))) < 1e-10);
      CHECK(std::abs(ex.trace() - x.trace()) < 1e-10);
    }
}

TEST_CASE("standard and Fourier MASAs are quasi-orthogonal in d = 5") {
  const auto [e, f] = standard_and_fourier(5);
  const auto r = masas_orthogonal(masa_from_basis(e), masa_from_basis(f));
  CHECK(r.orthogonal);
  CHECK(r.unbiased);
  CHECK(r.trace_deviation <= 1e-12);
  CHECK(r.overlap_deviation <= 1e-12);
}

TEST_CASE("a MASA is not quasi-orthogonal to itself") {
  Rng rng(73);
  const auto m = random_masa(3, rng);
  const auto r = masas_orthogonal(m, m);
  CHECK_FALSE(r.orthogonal);
  CHECK_FALSE(r.unbiased);
}

TEST_CASE("trace factorization for unbiased projections: tau(PQ) = 1/d^2") {
  const std::size_t d = 4;
  const auto [e, f] = standard_and_fourier(d);
  const auto a = masa_from_basis(e), b = masa_from_basis(f);
  for (const auto& p : a.projections)
    for (const auto& q : b.projections) {
      const double tau_pq = (p * q).trace().real() / d;
      CHECK(tau_pq == doctest::Approx(1.0 / (d * d)).epsilon(1e-14));
      CHECK(tau_pq == doctest::Approx((p.trace().real() / d) * (q.trace().real() / d)).epsilon(1e-14));
    }
}

TEST_CASE("property: both orthogonality routes agree on random and unbiased pairs") {
  Rng rng(79);
  for (std::size_t d : {2u, 3u, 4u}) {
    const auto [e, f] = standard_and_fourier(d);
    for (int trial = 0; trial < 30; ++trial) {
      const auto u = random_unitary(d, rng);
      const auto r1 = masas_orthogonal(masa_from_basis(Basis(u * e.matrix())),
                                       masa_from_basis(Basis(u * f.matrix())));
      CHECK(r1.orthogonal);
      CHECK(r1.routes_agree());
      const auto r2 = masas_orthogonal(random_masa(d, rng), random_masa(d, rng));
      CHECK_FALSE(r2.orthogonal);
      CHECK(r2.routes_agree());
    }
  }
}

TEST_CASE("conjugation sum over matrix units of M_2 is Tr(X) 1") {
  Rng rng(83);
  std::vector<ComplexMatrix> units;
  for (std::size_t u = 0; u < 4; ++u) units.push_back(ComplexMatrix::unit(2, u / 2, u % 2));
  const OperatorSubspace onb(2, units);
  for (int trial = 0; trial < 5; ++trial) {
    const auto x = random_ginibre(2, rng);
    CHECK(hs_distance(onb_conjugation_sum(onb, x), ComplexMatrix::identity(2) * x.trace()) < 1e-14);
  }
}

TEST_CASE("conjugation sum of the identity is d times the identity") {
  const auto onb = full_space(3);
  CHECK(hs_distance(onb_conjugation_sum(onb, ComplexMatrix::identity(3)),
                    ComplexMatrix::identity(3) * cdouble(3.0)) < 1e-14);
}

TEST_CASE("conjugation sum over a random ONB of M_3") {
  Rng rng(89);
  const std::size_t d = 3;
  for (int trial = 0; trial < 10; ++trial) {
    const auto w = random_unitary(d * d, rng);
    std::vector<ComplexMatrix> onb;
    for (std::size_t k = 0; k < d * d; ++k) onb.push_back(ComplexMatrix(d, w.column(k)));
    const auto x = random_ginibre(d, rng);
    const auto s = onb_conjugation_sum(OperatorSubspace(d, onb), x);
    CHECK(hs_distance(s, ComplexMatrix::identity(d) * x.trace()) <= 1e-10 * (1.0 + hs_norm(x)));
  }
}

TEST_CASE("conjugation sum needs a full ONB") {
  try {
    onb_conjugation_sum(diagonal_subspace(3), ComplexMatrix::identity(3));
    FAIL("expected NotFullOnb");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFullOnb);
  }
}

// Reference values in this block come from tests/oracles/choi_oracle.py.

TEST_CASE("Choi matrix of the identity map is d times a rank-one projector") {
  const auto id = LinearMapOnMatrices::from_kraus(3, {ComplexMatrix::identity(3)});
  const auto c = choi_matrix(id, 1);
  CHECK(c.dim() == 9);
  const auto values = hermitian_eigenvalues(c);
  CHECK(values.back() == doctest::Approx(3.0).epsilon(1e-13));
  for (std::size_t i = 0; i + 1 < values.size(); ++i) CHECK(std::abs(values[i]) < 1e-13);
  CHECK(is_k_positive(id, 1).psd);
}

TEST_CASE("transpose on M_2 is not 2-positive") {
  const auto t = LinearMapOnMatrices::transpose_map(2);
  const auto r = is_k_positive(t, 2);
  CHECK_FALSE(r.psd);
  REQUIRE(r.min_eigenvalue.has_value());
  CHECK(*r.min_eigenvalue == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("pinching on M_2 is 2-positive") {
  const auto m = masa_from_basis(Basis(ComplexMatrix::identity(2)));
  const auto e = LinearMapOnMatrices::projection_onto(m.onb);
  const auto r = is_k_positive(e, 2);
  CHECK(r.psd);
  REQUIRE(r.min_eigenvalue.has_value());
  CHECK(*r.min_eigenvalue >= -1e-10);
}

TEST_CASE("projection onto a MASA carries a consistent Kraus form") {
  Rng rng(97);
  const auto m = random_masa(4, rng);
  const auto e = LinearMapOnMatrices::projection_onto(m.onb).with_kraus(m.onb.onb());
  CHECK(e.form_disagreement() < 1e-10);
  const auto x = random_ginibre(4, rng);
  CHECK(hs_distance(e.apply(x), cond_expect(m, x)) < 1e-12);
  CHECK(hs_distance(e.apply_kraus(x), cond_expect(m, x)) < 1e-12);
  // The transpose is no conjugation sum of these operators.
  CHECK_THROWS_AS(LinearMapOnMatrices::transpose_map(4).with_kraus(m.onb.onb()), Error);
}

TEST_CASE("choi_matrix rejects a zero amplification") {
  const auto id = LinearMapOnMatrices::from_kraus(2, {ComplexMatrix::identity(2)});
  try {
    choi_matrix(id, 0);
    FAIL("expected InvalidMap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidMap);
  }
}

TEST_CASE("diagonal subspace of M_3 is a subalgebra by all three criteria") {
  const auto r = is_subalgebra(diagonal_subspace(3));
  CHECK(r.positivity.psd);
  CHECK(r.closed);
  CHECK(r.schwarz_holds);
  CHECK(r.verdict == SubalgebraVerdict::Subalgebra);
}

TEST_CASE("span{1, diag(0,1,2)} is not a subalgebra") {
  const std::vector<double> ramp{0.0, 1.0, 2.0};
  const auto k = span_of({ComplexMatrix::identity(3), ComplexMatrix::diagonal(std::span<const double>(ramp))});
  const auto r = is_subalgebra(k);
  CHECK_FALSE(r.closed);
  // diag(0,1,4) lies outside the span; its distance is sqrt(2/3).
  const std::vector<double> squares{0.0, 1.0, 4.0};
  CHECK(k.distance_to(ComplexMatrix::diagonal(std::span<const double>(squares))) ==
        doctest::Approx(0.81649658092772592).epsilon(1e-12));
  CHECK_FALSE(r.positivity.psd);
  REQUIRE(r.positivity.min_eigenvalue.has_value());
  CHECK(std::abs(*r.positivity.min_eigenvalue - (-0.33333333333333359)) < 1e-9);
  CHECK_FALSE(r.schwarz_holds);
  CHECK(r.verdict == SubalgebraVerdict::NotSubalgebra);
}

TEST_CASE("full M_2 is a subalgebra") {
  CHECK(is_subalgebra(full_space(2)).verdict == SubalgebraVerdict::Subalgebra);
}

TEST_CASE("subalgebra test refuses subspaces outside its hypotheses") {
  try {
    is_subalgebra(span_of({sigma_z()}));
    FAIL("expected HypothesisFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesisFailed);
  }
  try {
    is_subalgebra(span_of({ComplexMatrix::identity(2), ComplexMatrix::unit(2, 0, 1)}));
    FAIL("expected HypothesisFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesisFailed);
  }
}

TEST_CASE("verify_masa outcomes") {
  CHECK(verify_masa(diagonal_subspace(3)).passed);

  const auto m2 = verify_masa(span_of({ComplexMatrix::identity(2), sigma_x(), sigma_y(), sigma_z()}));
  CHECK_FALSE(m2.passed);
  CHECK(m2.failed_at == MasaStage::Dimension);
  CHECK(m2.dimension == 4);

  // M_2 (x) 1 inside M_4: a 4-dimensional unital *-subalgebra that is not abelian.
  const auto id2 = ComplexMatrix::identity(2);
  const auto blocks = span_of({kron(id2, id2), kron(sigma_x(), id2), kron(sigma_y(), id2), kron(sigma_z(), id2)});
  const auto nonab = verify_masa(blocks);
  CHECK(nonab.failed_at == MasaStage::Abelian);
  CHECK(nonab.max_commutator > 0.5);  // [sx, sy] (x) 1 over HS-normalized elements has norm 1

  const auto no_unit = verify_masa(span_of({sigma_z(), sigma_x()}));
  CHECK(no_unit.failed_at == MasaStage::ContainsUnit);

  const auto not_adj = verify_masa(span_of({ComplexMatrix::identity(2), ComplexMatrix::unit(2, 0, 1)}));
  CHECK(not_adj.failed_at == MasaStage::SelfAdjoint);

  const std::vector<double> ramp{0.0, 1.0, 2.0};
  const auto not_alg = verify_masa(span_of({ComplexMatrix::identity(3),
                                            ComplexMatrix::diagonal(std::span<const double>(ramp)),
                                            ComplexMatrix::unit(3, 0, 1) + ComplexMatrix::unit(3, 1, 0)}));
  CHECK(not_alg.failed_at == MasaStage::Subalgebra);
}

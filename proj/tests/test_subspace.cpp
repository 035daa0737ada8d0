#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "mub/random.hpp"

using namespace mub;
using namespace mub::test;

TEST_CASE("gram_schmidt normalizes an orthogonal pair") {
  const std::vector<ComplexMatrix> in{ComplexMatrix::identity(2), sigma_z()};
  const auto s = gram_schmidt(in);
  REQUIRE(s.size() == 2);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(hs_distance(s[0], scaled(ComplexMatrix::identity(2), r)) < 1e-15);
  CHECK(hs_distance(s[1], scaled(sigma_z(), r)) < 1e-15);
}

TEST_CASE("gram_schmidt drops dependent elements") {
  const std::vector<ComplexMatrix> in{ComplexMatrix::identity(2), scaled(ComplexMatrix::identity(2), 2)};
  const auto s = gram_schmidt(in);
  REQUIRE(s.size() == 1);
  CHECK(hs_distance(s[0], scaled(ComplexMatrix::identity(2), 1.0 / std::sqrt(2.0))) < 1e-15);
}

TEST_CASE("gram_schmidt of an empty list is empty") {
  CHECK(gram_schmidt(std::vector<ComplexMatrix>{}).empty());
}

TEST_CASE("gram_schmidt output is orthonormal and spans the input") {
  Rng rng(21);
  std::vector<ComplexMatrix> in;
  for (int i = 0; i < 5; ++i) in.push_back(random_ginibre(3, rng));
  const auto s = gram_schmidt(in);
  REQUIRE(s.size() == 5);
  CHECK(s.gram_deviation() < 1e-12);
  for (const auto& m : in) CHECK(s.distance_to(m) < 1e-12 * hs_norm(m));
}

TEST_CASE("complement of sigma_z contains the identity") {
  const auto sub = span_of({sigma_z()});
  const auto comp = orthogonal_complement(sub);
  CHECK(comp.size() == 3);
  CHECK(comp.distance_to(ComplexMatrix::identity(2)) < 1e-14);
  for (const auto& c : comp.onb()) CHECK(std::abs(hs_inner(sub[0], c)) < 1e-14);
}

TEST_CASE("complement of the full space is empty") {
  std::vector<ComplexMatrix> units;
  for (std::size_t u = 0; u < 4; ++u) units.push_back(ComplexMatrix::unit(2, u / 2, u % 2));
  CHECK(orthogonal_complement(span_of(units)).empty());
}

TEST_CASE("complement of span{sigma_z, sigma_x} is span{1, sigma_y}") {
  // sigma_y is orthogonal to sigma_z and sigma_x: Tr(sigma_y sigma_z) = Tr(sigma_y sigma_x) = 0.
  CHECK(std::abs(hs_inner(sigma_y(), sigma_z())) == 0.0);
  CHECK(std::abs(hs_inner(sigma_y(), sigma_x())) == 0.0);
  const auto comp = orthogonal_complement(span_of({sigma_z(), sigma_x()}));
  CHECK(subspace_distance(comp, span_of({ComplexMatrix::identity(2), sigma_y()})) < 1e-13);
}

TEST_CASE("orthogonal_complement rejects a non-orthonormal input") {
  const OperatorSubspace bad(2, {ComplexMatrix::identity(2), sigma_z()});
  try {
    orthogonal_complement(bad);
    FAIL("expected InvalidSubspace");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidSubspace);
  }
}

TEST_CASE("property: double complement and dimension count") {
  Rng rng(23);
  for (std::size_t d = 2; d <= 5; ++d)
    for (std::size_t k = 0; k <= d * d; k += d) {
      std::vector<ComplexMatrix> in;
      for (std::size_t i = 0; i < k; ++i) in.push_back(random_ginibre(d, rng));
      const auto s = gram_schmidt(d, in);
      const auto c = orthogonal_complement(s);
      CHECK(s.size() + c.size() == d * d);
      CHECK(c.gram_deviation() < 1e-12);
      CHECK(subspace_distance(orthogonal_complement(c), s) < 1e-9);
    }
}

TEST_CASE("orthogonal_complement is deterministic") {
  Rng rng(29);
  std::vector<ComplexMatrix> in;
  for (int i = 0; i < 6; ++i) in.push_back(random_ginibre(3, rng));
  const auto s = gram_schmidt(in);
  const auto a = orthogonal_complement(s), b = orthogonal_complement(s);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

#include "mub/random.hpp"

#include <cmath>

namespace mub {

double random_normal(Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng);
}

ComplexMatrix random_ginibre(std::size_t dim, Rng& rng) {
  ComplexMatrix m(dim);
  for (auto& z : m.data()) {
    const double re = random_normal(rng);
    const double im = random_normal(rng);
    z = {re, im};
  }
  return m;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  return hermitian_part(random_ginibre(dim, rng));
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  ComplexMatrix g = random_ginibre(dim, rng);
  ComplexMatrix q(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    auto v = g.column(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        cdouble c = 0.0;
        for (std::size_t r = 0; r < dim; ++r) c += std::conj(q(r, k)) * v[r];
        for (std::size_t r = 0; r < dim; ++r) v[r] -= c * q(r, k);
      }
    }
    double n = 0.0;
    for (const auto& z : v) n += std::norm(z);
    n = std::sqrt(n);
    for (std::size_t r = 0; r < dim; ++r) q(r, j) = v[r] / n;
  }
  return q;
}

}  // namespace mub

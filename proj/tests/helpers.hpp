#pragma once

#include <cmath>
#include <vector>

#include "mub/matrix.hpp"
#include "mub/subspace.hpp"

namespace mub::test {

inline ComplexMatrix sigma_x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
inline ComplexMatrix sigma_y() {
  return ComplexMatrix(2, {0.0, cdouble(0, -1), cdouble(0, 1), 0.0});
}
inline ComplexMatrix sigma_z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }

inline ComplexMatrix scaled(ComplexMatrix m, double s) { return m * cdouble(s); }

inline OperatorSubspace span_of(std::vector<ComplexMatrix> ms) {
  return gram_schmidt(ms.front().dim(), ms, 1e-12);
}

/// Rank-one projector set of a basis, as one stacked list; two bases agree up
/// to column phases and order iff these agree as sets.
inline double projector_set_distance(const ComplexMatrix& u, const ComplexMatrix& v) {
  const std::size_t d = u.dim();
  double worst = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const auto pu = ComplexMatrix::outer(u.column(i));
    double best = INFINITY;
    for (std::size_t j = 0; j < d; ++j)
      best = std::min(best, hs_distance(pu, ComplexMatrix::outer(v.column(j))));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace mub::test

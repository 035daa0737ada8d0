#include "mub/completion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mub/simdiag.hpp"

namespace mub {

OperatorSubspace traceless_onb(const Masa& m) {
  const std::size_t d = m.dim();
  if (m.projections.size() != d || d == 0)
    throw Error(ErrorCode::InvalidMasa, "MASA must carry exactly d projections");
  // 1 followed by d - 1 of the projections spans the MASA; dropping the first
  // orthonormalized element leaves the traceless part.
  std::vector<ComplexMatrix> seed{ComplexMatrix::identity(d) * cdouble(1.0 / std::sqrt(double(d)))};
  seed.insert(seed.end(), m.projections.begin(), m.projections.end() - 1);
  const OperatorSubspace all = gram_schmidt(d, seed, 1e-12);
  if (all.size() != d)
    throw Error(ErrorCode::InvalidMasa, "projections are linearly dependent");
  return OperatorSubspace(d, {all.onb().begin() + 1, all.onb().end()});
}

OperatorSubspace missing_subspace(const std::vector<Masa>& masas, double tol) {
  if (masas.empty()) throw Error(ErrorCode::WrongCount, "no MASAs given");
  const std::size_t d = masas.front().dim();
  if (masas.size() != d)
    throw Error(ErrorCode::WrongCount, "need exactly d = " + std::to_string(d) + " MASAs, got " +
                                           std::to_string(masas.size()));

  double worst = 0.0;
  std::pair<std::size_t, std::size_t> worst_pair{0, 0};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const auto rep = masas_orthogonal(masas[i], masas[j], tol);
      if (rep.trace_deviation > worst) {
        worst = rep.trace_deviation;
        worst_pair = {i, j};
      }
    }
  if (worst > tol)
    throw Error(ErrorCode::NotMub, "MASAs " + std::to_string(worst_pair.first) + " and " +
                                       std::to_string(worst_pair.second) +
                                       " are not quasi-orthogonal (deviation " +
                                       std::to_string(worst) + ")");

  std::vector<ComplexMatrix> v;
  v.reserve(d * (d - 1));
  for (const auto& m : masas) {
    const auto t = traceless_onb(m);
    v.insert(v.end(), t.onb().begin(), t.onb().end());
  }
  // The pieces are orthogonal only up to the input accuracy; clean them up.
  const OperatorSubspace vspace = gram_schmidt(d, v, 1e-6);
  if (vspace.size() != d * (d - 1))
    throw Error(ErrorCode::NotMub, "traceless parts span " + std::to_string(vspace.size()) +
                                       " dimensions, expected " + std::to_string(d * (d - 1)));

  OperatorSubspace b = orthogonal_complement(vspace);
  const double unit_gap =
      b.distance_to(ComplexMatrix::identity(d) * cdouble(1.0 / std::sqrt(double(d))));
  if (b.size() != d || unit_gap > tol)
    throw Error(ErrorCode::NumericalFailure,
                "complement does not contain the identity (residual " + std::to_string(unit_gap) + ")");
  return b;
}

Basis extract_basis(const OperatorSubspace& b, std::uint64_t seed, double tol) {
  const std::size_t d = b.dim();
  const Basis u = simultaneous_diagonalize(b.onb(), seed, tol);

  std::vector<ComplexMatrix> herm;
  for (const auto& m : b.onb()) herm.push_back(hermitian_part(m));

  // Eigenvalue tuples on a 1e-8 grid so that the ordering is a strict weak order.
  constexpr double kGrid = 1e-8;
  std::vector<std::vector<long long>> keys(d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto col = u.vector(j);
    for (const auto& h : herm) {
      const auto hc = mub::apply(h, col);
      cdouble s = 0.0;
      for (std::size_t r = 0; r < d; ++r) s += std::conj(col[r]) * hc[r];
      keys[j].push_back(std::llround(s.real() / kGrid));
    }
  }
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return keys[i] < keys[j]; });

  ComplexMatrix out(d);
  for (std::size_t j = 0; j < d; ++j) {
    auto col = u.vector(order[j]);
    double peak = 0.0;
    for (const auto& z : col) peak = std::max(peak, std::abs(z));
    for (auto& z : col) {
      if (std::abs(z) > 1e-8 * peak) {
        const double mag = std::abs(z);
        const cdouble phase = std::conj(z) / mag;
        for (auto& w : col) w *= phase;
        z = mag;  // exactly real, without rounding residue
        break;
      }
    }
    out.set_column(j, col);
  }
  return Basis(std::move(out));
}

std::string_view to_string(CompletionStatus s) {
  switch (s) {
    case CompletionStatus::Completed: return "completed";
    case CompletionStatus::WrongCount: return "wrong-count";
    case CompletionStatus::NotMub: return "not-mub";
    case CompletionStatus::NumericalFailure: return "numerical-failure";
  }
  return "unknown";
}

CompletionReport complete_collection(const MubCollection& c, std::uint64_t seed) {
  CompletionReport r;
  const std::size_t d = c.dim;
  const double tol = c.tol;

  if (c.bases.size() != d) {
    r.status = CompletionStatus::WrongCount;
    r.message = "completion needs exactly d = " + std::to_string(d) + " bases, got " +
                std::to_string(c.bases.size()) +
                "; collections missing more than one basis are not always completable";
    return r;
  }
  const VerifyReport input = verify_collection(c);
  r.residuals["input_max_unbiased_dev"] = input.max_unbiased_dev;
  r.residuals["input_max_unitarity_dev"] = input.max_unitarity_dev;
  if (!input.pass) {
    r.status = CompletionStatus::NotMub;
    r.message = "input bases " + std::to_string(input.worst_pair.first) + " and " +
                std::to_string(input.worst_pair.second) + " fail verification (unbiasedness " +
                std::to_string(input.max_unbiased_dev) + ", unitarity " +
                std::to_string(input.max_unitarity_dev) + ")";
    return r;
  }
  r.input_ok = true;

  auto numerical = [&](const std::string& what) {
    r.status = CompletionStatus::NumericalFailure;
    r.message = what + " (exact arithmetic cannot fail here, so this is a floating-point failure)";
    return r;
  };

  std::vector<Masa> masas;
  OperatorSubspace b;
  try {
    for (const auto& basis : c.bases) masas.push_back(masa_from_basis(basis, tol));
    b = missing_subspace(masas, tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotMub) {
      r.status = CompletionStatus::NotMub;
      r.message = e.what();
      return r;
    }
    return numerical(e.what());
  }
  r.vperp_dim = b.size();
  r.residuals["vperp_gram_deviation"] = b.gram_deviation();

  // E_B(X) = sum_k B_k^* X B_k on every matrix unit, and unitality of that sum.
  {
    double kraus_gap = 0.0;
    ComplexMatrix unitality(d);
    for (const auto& bk : b.onb()) unitality += bk.adjoint() * bk;
    for (std::size_t u = 0; u < d * d; ++u) {
      const auto e = ComplexMatrix::unit(d, u / d, u % d);
      ComplexMatrix kraus(d);
      for (const auto& bk : b.onb()) kraus += bk.adjoint() * e * bk;
      kraus_gap = std::max(kraus_gap, hs_distance(kraus, b.project(e)));
    }
    r.residuals["kraus_projection_gap"] = kraus_gap;
    r.residuals["unitality_residual"] = hs_distance(unitality, ComplexMatrix::identity(d));
  }

  r.masa_report = verify_masa(b, tol, seed);
  const MasaReport& mr = *r.masa_report;
  r.residuals["masa_unit_residual"] = mr.unit_residual;
  r.residuals["masa_adjoint_residual"] = mr.adjoint_residual;
  r.residuals["masa_max_commutator"] = mr.max_commutator;
  if (mr.subalgebra) {
    r.residuals["closure_residual"] = mr.subalgebra->closure_residual;
    r.residuals["multiplicative_defect"] = mr.subalgebra->multiplicative_defect;
    r.residuals["schwarz_min_eigenvalue"] = mr.subalgebra->schwarz_min_eigenvalue;
    if (mr.subalgebra->positivity.min_eigenvalue)
      r.residuals["choi_min_eigenvalue"] = *mr.subalgebra->positivity.min_eigenvalue;
  }
  if (!mr.passed)
    return numerical("MASA certificate failed at stage '" + std::string(to_string(mr.failed_at)) +
                     "'");

  Basis extra;
  try {
    extra = extract_basis(b, seed, tol);
  } catch (const Error& e) {
    return numerical(e.what());
  }
  r.residuals["extraction_offdiagonal"] = max_offdiagonal_residual(b.onb(), extra.matrix());

  MubCollection full = c;
  full.bases.push_back(extra);
  r.final_verify = verify_collection(full);
  r.residuals["final_max_unbiased_dev"] = r.final_verify->max_unbiased_dev;
  r.residuals["final_max_unitarity_dev"] = r.final_verify->max_unitarity_dev;

  const Masa recovered = masa_from_basis(extra, std::max(tol, 1e-9));
  double trace_dev = 0.0;
  for (const auto& m : masas)
    trace_dev = std::max(trace_dev, masas_orthogonal(recovered, m, tol).trace_deviation);
  r.residuals["recovered_trace_deviation"] = trace_dev;
  r.residuals["recovered_span_distance"] = subspace_distance(recovered.onb, b);

  if (!r.final_verify->pass || trace_dev > tol)
    return numerical("recovered basis fails final verification");

  r.missing_basis = std::move(extra);
  r.status = CompletionStatus::Completed;
  r.message = "completed to " + std::to_string(d + 1) + " bases";
  return r;
}

MubCollection completed(const MubCollection& c, const CompletionReport& report) {
  if (!report.ok() || !report.missing_basis)
    throw Error(ErrorCode::NumericalFailure, "completion did not succeed: " + report.message);
  MubCollection out = c;
  out.bases.push_back(*report.missing_basis);
  return out;
}

}  // namespace mub

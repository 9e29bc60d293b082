#include "sepstates/majorization.hpp"

#include <cmath>
#include <limits>

namespace sepstates {

RVec pad_ascending(const RVec& w, int length) {
  if (w.size() > length) {
    throw invalid_input("pad_ascending: vector longer than target length");
  }
  RVec out = RVec::Zero(length);
  out.tail(w.size()) = w;
  return out;
}

MajorizationReport check_ensemble_majorization(const PureState& source,
                                               const Ensemble& ens,
                                               double tolerance) {
  source.validate();
  ens.validate();
  const int d = source.schmidt_dim();
  const RVec rhs = e_n_from_weights(
      pad_ascending(schmidt_decompose(source).weights, d));

  RVec lhs = RVec::Zero(d);
  for (const auto& [p, state] : ens.outcomes) {
    const RVec w = schmidt_decompose(state).weights;
    if (w.size() > d) {
      throw invalid_input(
          "check_ensemble_majorization: ensemble Schmidt rank exceeds source dimension");
    }
    lhs += p * e_n_from_weights(pad_ascending(w, d));
  }

  MajorizationReport rep;
  rep.tolerance = tolerance;
  rep.min_slack = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= d; ++n) {
    const double slack = rhs(n - 1) - lhs(n - 1);
    rep.n_values.push_back({n, lhs(n - 1), rhs(n - 1), slack});
    if (slack < rep.min_slack) {
      rep.min_slack = slack;
      rep.worst_n = n;
    }
  }
  rep.verdict = rep.min_slack >= -tolerance;
  return rep;
}

DeterministicResult can_transform_deterministic(const PureState& source,
                                                const PureState& target,
                                                double tolerance) {
  const int d = std::max(source.schmidt_dim(), target.schmidt_dim());
  const RVec es = e_n_from_weights(
      pad_ascending(schmidt_decompose(source).weights, d));
  const RVec et = e_n_from_weights(
      pad_ascending(schmidt_decompose(target).weights, d));
  DeterministicResult res;
  res.per_n_slack = es - et;
  res.feasible = (res.per_n_slack.minCoeff() >= -tolerance);
  return res;
}

double pmax_sep(const PureState& source, const PureState& target) {
  const int d = std::max(source.schmidt_dim(), target.schmidt_dim());
  const RVec es = e_n_from_weights(
      pad_ascending(schmidt_decompose(source).weights, d));
  const RVec et = e_n_from_weights(
      pad_ascending(schmidt_decompose(target).weights, d));
  double best = std::numeric_limits<double>::infinity();
  for (int n = 0; n < d; ++n) {
    if (et(n) <= 0.0) {
      if (es(n) <= 0.0) continue;  // 0/0: no constraint at this n
      continue;                    // x/0 -> +inf: never the minimum
    }
    best = std::min(best, es(n) / et(n));
  }
  if (!std::isfinite(best)) return 1.0;  // only trivial constraints
  return std::clamp(best, 0.0, 1.0);
}

MonotoneResult check_average_monotone(const PureState& source,
                                      const Ensemble& ens, Monotone measure) {
  MonotoneResult res;
  if (measure == Monotone::Entropy) {
    double avg = 0.0;
    for (const auto& [p, state] : ens.outcomes) {
      avg += p * entanglement_entropy(state);
    }
    res.deficit = entanglement_entropy(source) - avg;
  } else {
    res.deficit = check_ensemble_majorization(source, ens).min_slack;
  }
  res.holds = res.deficit >= -tol::inequality;
  return res;
}

Theorem2Report verify_theorem2(const std::vector<KrausPair>& pairs,
                               const PureState& s) {
  s.validate();
  if (s.dim_a != s.dim_b) {
    throw invalid_input("verify_theorem2: requires equal local dimensions");
  }
  if (pairs.empty()) {
    throw invalid_input("verify_theorem2: empty collection");
  }
  for (const auto& [a, b] : pairs) {
    if (a.cols() != s.dim_a || b.cols() != s.dim_b) {
      throw invalid_input("verify_theorem2: operator/state dimension mismatch");
    }
  }
  const int d = s.dim_b;
  const CMat rho_b =
      partial_trace(s.amplitudes * s.amplitudes.adjoint(), s.dim_a, s.dim_b,
                    Side::A);
  const ROperator rop = compute_r(pairs);

  Theorem2Report rep;
  rep.lhs.assign(d, 0.0);
  rep.rhs.assign(d, 0.0);
  for (const auto& [a, b] : pairs) {
    const CVec out = kron(a, b) * s.amplitudes;
    CMat rho_k = out * out.adjoint();
    rho_k = 0.5 * (rho_k + rho_k.adjoint());
    const CMat red = partial_trace(rho_k, static_cast<int>(a.rows()),
                                   static_cast<int>(b.rows()), Side::A);
    const HermitianSpectrum spec = hermitian_eig(red);
    double acc = 0.0;
    for (int n = 1; n <= d; ++n) {
      acc += spec.eigenvalues(n - 1);
      rep.lhs[n - 1] += acc;
    }
  }
  {
    const HermitianSpectrum spec = hermitian_eig(rho_b);
    double acc = 0.0;
    for (int n = 1; n <= d; ++n) {
      acc += spec.eigenvalues(n - 1);
      rep.rhs[n - 1] = rop.norm * acc;
    }
  }
  rep.min_slack = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= d; ++n) {
    const double rel = (rep.rhs[n - 1] - rep.lhs[n - 1]) /
                       std::max(1.0, rep.rhs[n - 1]);
    if (rel < rep.min_slack) {
      rep.min_slack = rel;
      rep.worst_n = n;
      rep.worst_lhs = rep.lhs[n - 1];
      rep.worst_rhs = rep.rhs[n - 1];
    }
  }
  rep.holds = rep.min_slack >= -tol::inequality;
  return rep;
}

Lemma1Report verify_lemma1(const CMat& a, const CMat& b, const RVec& psi_diag,
                           int n) {
  const int d = static_cast<int>(psi_diag.size());
  if (a.rows() != d || a.cols() != d || b.rows() != d || b.cols() != d) {
    throw invalid_input("verify_lemma1: A, B must be D x D");
  }
  for (int i = 0; i < d; ++i) {
    if (psi_diag(i) < 0.0 || (i > 0 && psi_diag(i) < psi_diag(i - 1))) {
      throw invalid_input("verify_lemma1: psi_diag not nonnegative ascending");
    }
  }
  if (n < 1 || n > d) {
    throw invalid_input("verify_lemma1: n out of range");
  }

  const StateMap psi{CMat(psi_diag.cast<std::complex<double>>().asDiagonal())};
  const auto [psi_n, psi_tilde] = truncate_map(psi, n);

  const CMat full = a * psi.matrix * b;        // A psi B
  const CMat kept = a * psi_n.matrix * b;      // A psi_n B
  const CMat tilde = a * psi_tilde.matrix;     // A psi_tilde_n

  Lemma1Report rep;
  rep.lhs = chi_n(full * full.adjoint(), n);
  rep.rhs = kept.squaredNorm();

  const CMat p = complement_projector(tilde);
  rep.projector_idempotency = spectral_norm(p * p - p);
  rep.projector_rank = static_cast<int>(std::lround(p.trace().real()));
  rep.annihilation = spectral_norm(p * tilde);
  rep.chain = (p * kept).squaredNorm();

  const double tolr = tol::inequality * std::max(1.0, rep.rhs);
  rep.holds = rep.lhs <= rep.chain + tolr && rep.chain <= rep.rhs + tolr &&
              rep.projector_idempotency <= tol::projector &&
              rep.projector_rank >= n && rep.annihilation <= tol::projector;
  return rep;
}

}  // namespace sepstates

#pragma once

#include <vector>

#include "sepstates/sepops.hpp"

namespace sepstates {

/// Per-n record of both sides of the majorization inequality
/// sum_k p_k E_n(phi_k) <= E_n(psi).
struct MajorizationReport {
  struct Entry {
    int n;
    double lhs;  // sum_k p_k E_n(phi_k)
    double rhs;  // E_n(psi)
    double slack;  // rhs - lhs
  };
  std::vector<Entry> n_values;
  double min_slack = 0.0;
  int worst_n = 0;
  bool verdict = false;
  double tolerance = tol::inequality;
};

/// Zero-pad an ascending weight vector at the LOW end to the given length.
RVec pad_ascending(const RVec& w, int length);

MajorizationReport check_ensemble_majorization(const PureState& source,
                                               const Ensemble& ens,
                                               double tolerance = tol::inequality);

struct DeterministicResult {
  bool feasible = false;
  RVec per_n_slack;  // E_n(source) - E_n(target)
};

/// Deterministic convertibility: E_n(target) <= E_n(source) for all n.
DeterministicResult can_transform_deterministic(const PureState& source,
                                                const PureState& target,
                                                double tolerance = tol::inequality);

/// Optimal conversion probability min_n E_n(source)/E_n(target), clamped to
/// [0,1].  0/0 ratios are skipped; x/0 with x > 0 counts as +inf.
double pmax_sep(const PureState& source, const PureState& target);

enum class Monotone { EnFamily, Entropy };

struct MonotoneResult {
  bool holds = false;
  double deficit = 0.0;  // E(psi) - sum p_k E(phi_k); min over n for EnFamily
};

MonotoneResult check_average_monotone(const PureState& source,
                                      const Ensemble& ens, Monotone measure);

struct Theorem2Report {
  std::vector<double> lhs;  // per n, 1-based at index 0
  std::vector<double> rhs;
  int worst_n = 0;
  double worst_lhs = 0.0;
  double worst_rhs = 0.0;
  double min_slack = 0.0;  // relative
  bool holds = false;
};

/// sum_k chi_n(Tr_A[(A_k (x) B_k)|psi><psi|(A_k (x) B_k)^dag]) vs
/// ||R|| chi_n(Tr_A|psi><psi|), for every n.  Requires equal local
/// dimensions; no closure needed.
Theorem2Report verify_theorem2(const std::vector<KrausPair>& pairs,
                               const PureState& s);

struct Lemma1Report {
  double lhs = 0.0;    // chi_n(A psi B B^dag psi^dag A^dag)
  double chain = 0.0;  // Tr(P_n A psi_n B B^dag psi_n^dag A^dag P_n)
  double rhs = 0.0;    // Tr(A psi_n B B^dag psi_n^dag A^dag)
  double projector_idempotency = 0.0;  // ||P^2 - P||
  int projector_rank = 0;
  double annihilation = 0.0;  // ||P_n A psi_tilde_n||
  bool holds = false;
};

Lemma1Report verify_lemma1(const CMat& a, const CMat& b, const RVec& psi_diag,
                           int n);

}  // namespace sepstates

#include "sepstates/sepops.hpp"

#include <Eigen/QR>
#include <cmath>

namespace sepstates {

static void require_consistent(const std::vector<KrausPair>& pairs,
                               const char* who) {
  if (pairs.empty()) {
    throw invalid_input(std::string(who) + ": empty Kraus set");
  }
  const Eigen::Index da = pairs.front().a.cols();
  const Eigen::Index db = pairs.front().b.cols();
  for (const auto& [a, b] : pairs) {
    if (a.cols() != da || b.cols() != db) {
      throw invalid_input(std::string(who) + ": input dimensions differ across pairs");
    }
    if (!a.allFinite() || !b.allFinite()) {
      throw invalid_input(std::string(who) + ": non-finite Kraus entries");
    }
  }
}

ClosureResult check_closure(const ProductKrausSet& op) {
  require_consistent(op.pairs, "check_closure");
  const Eigen::Index da = op.pairs.front().a.cols();
  const Eigen::Index db = op.pairs.front().b.cols();
  CMat sum = CMat::Zero(da * db, da * db);
  for (const auto& [a, b] : op.pairs) {
    sum += kron(a.adjoint() * a, b.adjoint() * b);
  }
  const double residual = spectral_norm(sum - CMat::Identity(da * db, da * db));
  return {residual <= tol::closure, residual};
}

ProductKrausSet with_closure(ProductKrausSet op) {
  const ClosureResult c = check_closure(op);
  op.closure_checked = c.is_closed;
  op.closure_residual = c.residual;
  return op;
}

Ensemble apply_to_pure(const ProductKrausSet& op, const PureState& s,
                       double prune_tol) {
  s.validate();
  ClosureResult c{op.closure_checked, op.closure_residual};
  if (!op.closure_checked) c = check_closure(op);
  if (!c.is_closed) {
    throw invalid_input("apply_to_pure: operation not closed (residual " +
                        std::to_string(c.residual) + ")");
  }
  if (op.in_dim_a() != s.dim_a || op.in_dim_b() != s.dim_b) {
    throw invalid_input("apply_to_pure: operation/state dimension mismatch");
  }
  const StateMap psi = state_to_map(s);
  Ensemble ens;
  for (const auto& [a, b] : op.pairs) {
    // (A (x) B)|psi> in map form is A * psi * B^T.
    CMat out = a * psi.matrix * b.transpose();
    const double p = out.squaredNorm();
    if (p < prune_tol) {
      ens.pruned_mass += p;
      continue;
    }
    out /= std::sqrt(p);
    ens.outcomes.emplace_back(p, map_to_state({std::move(out)}));
  }
  if (ens.outcomes.empty()) {
    throw internal_error("apply_to_pure: all outcomes pruned");
  }
  return ens;
}

ROperator compute_r(const std::vector<KrausPair>& pairs) {
  require_consistent(pairs, "compute_r");
  const Eigen::Index da = pairs.front().a.cols();
  const Eigen::Index db = pairs.front().b.cols();
  CMat r = CMat::Zero(da * db, da * db);
  for (const auto& [a, b] : pairs) {
    r += kron(a.adjoint() * a, b.adjoint() * b);
  }
  r = 0.5 * (r + r.adjoint());
  return {r, operator_norm(r)};
}

CMat ginibre(int rows, int cols, double scale, Rng& rng) {
  CMat m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      m(i, j) = scale * rng.gaussian_complex();
    }
  }
  return m;
}

static CMat haar_isometry(int rows, int cols, Rng& rng) {
  const CMat g = ginibre(rows, cols, 1.0, rng);
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ() * CMat::Identity(rows, cols);
  const CMat r = q.adjoint() * g;
  // Fix the phase freedom of QR so the distribution is Haar.
  for (int j = 0; j < cols; ++j) {
    const std::complex<double> d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

CMat haar_unitary(int dim, Rng& rng) { return haar_isometry(dim, dim, rng); }

std::vector<CMat> gen_local_instrument(int dim, int n_outcomes, Rng& rng,
                                       bool projective) {
  if (n_outcomes < 1) {
    throw invalid_input("gen_local_instrument: n_outcomes must be >= 1");
  }
  std::vector<CMat> ops;
  ops.reserve(n_outcomes);
  if (projective) {
    if (n_outcomes != dim) {
      throw invalid_input("gen_local_instrument: projective needs n_outcomes == dim");
    }
    const CMat u = haar_unitary(dim, rng);
    for (int i = 0; i < dim; ++i) {
      ops.push_back(u.col(i) * u.col(i).adjoint());
    }
    return ops;
  }
  const CMat iso = haar_isometry(dim * n_outcomes, dim, rng);
  for (int i = 0; i < n_outcomes; ++i) {
    ops.push_back(iso.middleRows(static_cast<Eigen::Index>(i) * dim, dim));
  }
  return ops;
}

ProductKrausSet gen_separable_locc(int dim_a, int dim_b, int rounds,
                                   int outcomes_per_round, Rng& rng,
                                   bool branch_dependent) {
  if (rounds < 1 || outcomes_per_round < 1) {
    throw invalid_input("gen_separable_locc: rounds and outcomes must be >= 1");
  }
  double n_final = std::pow(static_cast<double>(outcomes_per_round), rounds);
  if (n_final > 4096.0) {
    throw resource_limit("gen_separable_locc: Kraus budget exceeded (N > 4096)");
  }
  std::vector<KrausPair> branches{
      {CMat::Identity(dim_a, dim_a), CMat::Identity(dim_b, dim_b)}};
  for (int r = 0; r < rounds; ++r) {
    const bool alice = (r % 2 == 0);
    const int dim = alice ? dim_a : dim_b;
    std::vector<CMat> shared;
    if (!branch_dependent) {
      shared = gen_local_instrument(dim, outcomes_per_round, rng);
    }
    std::vector<KrausPair> next;
    next.reserve(branches.size() * outcomes_per_round);
    for (const auto& br : branches) {
      const std::vector<CMat> instr =
          branch_dependent ? gen_local_instrument(dim, outcomes_per_round, rng)
                           : shared;
      for (const CMat& m : instr) {
        if (alice) {
          next.push_back({m * br.a, br.b});
        } else {
          next.push_back({br.a, m * br.b});
        }
      }
    }
    branches = std::move(next);
  }
  return with_closure({std::move(branches)});
}

ProductKrausSet mix_operations(const ProductKrausSet& op1,
                               const ProductKrausSet& op2, double q) {
  if (q < 0.0 || q > 1.0) {
    throw invalid_input("mix_operations: q must be in [0, 1]");
  }
  if (op1.in_dim_a() != op2.in_dim_a() || op1.in_dim_b() != op2.in_dim_b()) {
    throw invalid_input("mix_operations: dimension mismatch");
  }
  if (q == 1.0) return op1;
  if (q == 0.0) return op2;
  ProductKrausSet out;
  const double s1 = std::sqrt(q);
  const double s2 = std::sqrt(1.0 - q);
  for (const auto& [a, b] : op1.pairs) out.pairs.push_back({s1 * a, b});
  for (const auto& [a, b] : op2.pairs) out.pairs.push_back({s2 * a, b});
  return with_closure(std::move(out));
}

std::vector<KrausPair> gen_random_product_collection(int dim_a, int dim_b,
                                                     int n, double scale,
                                                     Rng& rng) {
  if (n < 1) {
    throw invalid_input("gen_random_product_collection: n must be >= 1");
  }
  std::vector<KrausPair> pairs;
  pairs.reserve(n);
  for (int k = 0; k < n; ++k) {
    pairs.push_back(
        {ginibre(dim_a, dim_a, scale, rng), ginibre(dim_b, dim_b, scale, rng)});
  }
  return pairs;
}

PureState random_pure_state(int dim_a, int dim_b, Rng& rng) {
  CVec v(static_cast<Eigen::Index>(dim_a) * dim_b);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.gaussian_complex();
  v /= v.norm();
  return {dim_a, dim_b, std::move(v)};
}

PureState state_from_schmidt(const RVec& weights, int dim_a, int dim_b) {
  const int d = static_cast<int>(weights.size());
  if (d > std::min(dim_a, dim_b)) {
    throw invalid_input("state_from_schmidt: more weights than min dimension");
  }
  CVec v = CVec::Zero(static_cast<Eigen::Index>(dim_a) * dim_b);
  for (int j = 0; j < d; ++j) {
    if (weights(j) < 0.0) {
      throw invalid_input("state_from_schmidt: negative weight");
    }
    v(static_cast<Eigen::Index>(j) * dim_b + j) = std::sqrt(weights(j));
  }
  PureState s{dim_a, dim_b, std::move(v)};
  s.validate();
  return s;
}

}  // namespace sepstates

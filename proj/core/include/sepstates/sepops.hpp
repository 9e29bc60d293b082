#pragma once

#include <vector>

#include "sepstates/rng.hpp"
#include "sepstates/states.hpp"

namespace sepstates {

/// One product Kraus operator A (x) B.
struct KrausPair {
  CMat a;
  CMat b;
};

/// A separable operation {A_k (x) B_k}.
struct ProductKrausSet {
  std::vector<KrausPair> pairs;
  bool closure_checked = false;
  double closure_residual = 0.0;

  int in_dim_a() const { return static_cast<int>(pairs.at(0).a.cols()); }
  int in_dim_b() const { return static_cast<int>(pairs.at(0).b.cols()); }
};

struct ClosureResult {
  bool is_closed = false;
  double residual = 0.0;
};

/// Residual of sum_k A_k^dag A_k (x) B_k^dag B_k against the identity.
ClosureResult check_closure(const ProductKrausSet& op);

/// Checks closure and stamps the result on the set.
ProductKrausSet with_closure(ProductKrausSet op);

/// Apply a closed separable operation to a pure state; outcomes below
/// prune_tol are dropped and their mass reported, never renormalized.
Ensemble apply_to_pure(const ProductKrausSet& op, const PureState& s,
                       double prune_tol = tol::prune);

struct ROperator {
  CMat r;       // sum_k A_k^dag A_k (x) B_k^dag B_k
  double norm;  // largest eigenvalue
};

/// No closure required; defined for any collection of product operators.
ROperator compute_r(const std::vector<KrausPair>& pairs);

/// Haar-random dim x dim unitary (QR of a Ginibre sample, phases fixed).
CMat haar_unitary(int dim, Rng& rng);

/// Random Ginibre matrix, i.i.d. standard complex Gaussian entries * scale.
CMat ginibre(int rows, int cols, double scale, Rng& rng);

/// Measurement operators {M_i} with sum M_i^dag M_i = I, cut from a
/// Haar-random isometry.  projective = true gives rank-1 projectors onto a
/// random orthonormal basis (requires n_outcomes == dim).
std::vector<CMat> gen_local_instrument(int dim, int n_outcomes, Rng& rng,
                                       bool projective = false);

/// Multi-round LOCC protocol flattened into a closed product Kraus set.
/// Round r alternates between the A and B side; with branch_dependent each
/// branch draws its own instrument for the next round.
ProductKrausSet gen_separable_locc(int dim_a, int dim_b, int rounds,
                                   int outcomes_per_round, Rng& rng,
                                   bool branch_dependent = true);

/// Convex mixture of two closed separable operations.
ProductKrausSet mix_operations(const ProductKrausSet& op1,
                               const ProductKrausSet& op2, double q);

/// Unconstrained random product collection (no closure), for fuzzing.
std::vector<KrausPair> gen_random_product_collection(int dim_a, int dim_b,
                                                     int n, double scale,
                                                     Rng& rng);

/// Haar-random pure state on dim_a x dim_b.
PureState random_pure_state(int dim_a, int dim_b, Rng& rng);

/// State sum_j sqrt(w_j) |jj> from given (normalized) Schmidt weights.
PureState state_from_schmidt(const RVec& weights, int dim_a, int dim_b);

}  // namespace sepstates

#pragma once

#include <utility>
#include <vector>

#include "sepstates/linalg.hpp"

namespace sepstates {

/// Normalized bipartite pure state with explicit local dimensions.
/// Amplitude index convention: (i, j) -> i * dim_b + j.
struct PureState {
  int dim_a = 0;
  int dim_b = 0;
  CVec amplitudes;

  void validate() const;
  int schmidt_dim() const { return std::min(dim_a, dim_b); }
};

/// The state's coefficient matrix, a dim_a x dim_b map from H_B to H_A.
struct StateMap {
  CMat matrix;
};

/// Schmidt form with weights ascending.
struct SchmidtDecomposition {
  RVec weights;  // ascending, sums to 1
  CMat basis_a;  // columns |a_j>
  CMat basis_b;  // columns |b_j>
};

struct Ensemble {
  std::vector<std::pair<double, PureState>> outcomes;
  double pruned_mass = 0.0;

  void validate() const;
};

StateMap state_to_map(const PureState& s);
PureState map_to_state(const StateMap& m);

SchmidtDecomposition schmidt_decompose(const PureState& s);

/// Reassemble sum_j sqrt(lambda_j) |a_j>|b_j>.
PureState schmidt_reconstruct(const SchmidtDecomposition& d);

/// Cumulative sums of the ascending Schmidt weights: entry n-1 is E_n.
/// Always evaluated on the smaller local dimension.
RVec e_n_vector(const PureState& s);
RVec e_n_from_weights(const RVec& ascending_weights);

/// Entropy of entanglement, -sum lambda log2 lambda.
double entanglement_entropy(const PureState& s);

/// |<x|y>| overlap; states compared up to global phase.
double overlap(const PureState& x, const PureState& y);

/// Split a diagonal ascending map into the n smallest entries and the rest.
/// Both parts are exact; psi = psi_n + psi_tilde_n.
std::pair<StateMap, StateMap> truncate_map(const StateMap& m, int n);

}  // namespace sepstates

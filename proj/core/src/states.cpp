#include "sepstates/states.hpp"

#include <cmath>

namespace sepstates {

void PureState::validate() const {
  if (dim_a < 1 || dim_b < 1) {
    throw invalid_input("PureState: dimensions must be positive");
  }
  if (amplitudes.size() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw invalid_input("PureState: amplitude count does not match dimensions");
  }
  if (!amplitudes.allFinite()) {
    throw invalid_input("PureState: non-finite amplitudes");
  }
  if (std::abs(amplitudes.norm() - 1.0) > tol::state_norm) {
    throw invalid_input("PureState: not normalized (norm " +
                        std::to_string(amplitudes.norm()) + ")");
  }
}

void Ensemble::validate() const {
  if (outcomes.empty()) {
    throw invalid_input("Ensemble: empty");
  }
  double total = pruned_mass;
  const int da = outcomes.front().second.dim_a;
  const int db = outcomes.front().second.dim_b;
  for (const auto& [p, state] : outcomes) {
    if (p < 0.0 || p > 1.0 + tol::inequality) {
      throw invalid_input("Ensemble: probability out of range");
    }
    state.validate();
    if (state.dim_a != da || state.dim_b != db) {
      throw invalid_input("Ensemble: member dimensions differ");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > tol::closure) {
    throw invalid_input("Ensemble: probabilities sum to " + std::to_string(total));
  }
}

StateMap state_to_map(const PureState& s) {
  s.validate();
  CMat m(s.dim_a, s.dim_b);
  for (int i = 0; i < s.dim_a; ++i) {
    for (int j = 0; j < s.dim_b; ++j) {
      m(i, j) = s.amplitudes(i * s.dim_b + j);
    }
  }
  return {std::move(m)};
}

PureState map_to_state(const StateMap& m) {
  const int da = static_cast<int>(m.matrix.rows());
  const int db = static_cast<int>(m.matrix.cols());
  PureState s{da, db, CVec(static_cast<Eigen::Index>(da) * db)};
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < db; ++j) {
      s.amplitudes(i * db + j) = m.matrix(i, j);
    }
  }
  s.validate();
  return s;
}

SchmidtDecomposition schmidt_decompose(const PureState& s) {
  const StateMap m = state_to_map(s);
  SvdResult f = svd(m.matrix);
  SchmidtDecomposition d;
  d.weights = f.singular_values.cwiseProduct(f.singular_values);
  d.basis_a = std::move(f.u);
  // |psi> = sum_j s_j |u_j>|conj(v_j)>
  d.basis_b = f.v.conjugate();
  return d;
}

PureState schmidt_reconstruct(const SchmidtDecomposition& d) {
  const int da = static_cast<int>(d.basis_a.rows());
  const int db = static_cast<int>(d.basis_b.rows());
  CMat m = CMat::Zero(da, db);
  for (Eigen::Index j = 0; j < d.weights.size(); ++j) {
    m += std::sqrt(std::max(0.0, d.weights(j))) * d.basis_a.col(j) *
         d.basis_b.col(j).transpose();
  }
  return map_to_state({std::move(m)});
}

RVec e_n_from_weights(const RVec& w) {
  RVec e(w.size());
  double acc = 0.0;
  for (Eigen::Index n = 0; n < w.size(); ++n) {
    acc += w(n);
    e(n) = acc;
  }
  return e;
}

RVec e_n_vector(const PureState& s) {
  // schmidt_decompose already works on the min(dim_a, dim_b) side, which
  // matches evaluating chi_n on the smaller reduced density operator.
  return e_n_from_weights(schmidt_decompose(s).weights);
}

double entanglement_entropy(const PureState& s) {
  const RVec w = schmidt_decompose(s).weights;
  double h = 0.0;
  for (Eigen::Index j = 0; j < w.size(); ++j) {
    if (w(j) > 0.0) h -= w(j) * std::log2(w(j));
  }
  return h;
}

double overlap(const PureState& x, const PureState& y) {
  if (x.dim_a != y.dim_a || x.dim_b != y.dim_b) {
    throw invalid_input("overlap: dimension mismatch");
  }
  return std::abs(x.amplitudes.dot(y.amplitudes));
}

std::pair<StateMap, StateMap> truncate_map(const StateMap& m, int n) {
  const CMat& mat = m.matrix;
  if (mat.rows() != mat.cols()) {
    throw invalid_input("truncate_map: matrix not square");
  }
  const int dim = static_cast<int>(mat.rows());
  if (n < 1 || n > dim) {
    throw invalid_input("truncate_map: n out of range");
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (i != j && mat(i, j) != std::complex<double>(0.0, 0.0)) {
        throw invalid_input("truncate_map: matrix not diagonal");
      }
    }
    if (mat(i, i).real() < 0.0 || mat(i, i).imag() != 0.0) {
      throw invalid_input("truncate_map: diagonal not nonnegative real");
    }
    if (i > 0 && mat(i, i).real() < mat(i - 1, i - 1).real()) {
      throw invalid_input("truncate_map: diagonal not ascending");
    }
  }
  CMat keep = CMat::Zero(dim, dim);
  for (int i = 0; i < n; ++i) keep(i, i) = mat(i, i);
  return {StateMap{keep}, StateMap{mat - keep}};
}

}  // namespace sepstates

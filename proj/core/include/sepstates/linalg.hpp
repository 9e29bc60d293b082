#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

#include "sepstates/tolerances.hpp"

namespace sepstates {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct resource_limit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending,
/// eigenvector columns orthonormal.
struct HermitianSpectrum {
  RVec eigenvalues;
  CMat eigenvectors;
};

struct SvdResult {
  CMat u;
  RVec singular_values;  // ascending
  CMat v;
};

bool is_finite(const CMat& m);

/// Largest singular value of an arbitrary matrix.
double spectral_norm(const CMat& m);

/// Thin SVD with singular values sorted ASCENDING (columns of u, v reordered
/// to match). m = u * diag(s) * v^dag.
SvdResult svd(const CMat& m);

/// Hermitian eigendecomposition; input is symmetrized after the hermiticity
/// check to suppress round-off asymmetry.
HermitianSpectrum hermitian_eig(const CMat& m);

/// Sum of the n smallest eigenvalues of a Hermitian PSD matrix.
double chi_n(const CMat& m, int n);

/// Kronecker product.
CMat kron(const CMat& a, const CMat& b);

enum class Side { A, B };

/// Partial trace of a (dim_a*dim_b)-dimensional Hermitian operator over the
/// given subsystem.
CMat partial_trace(const CMat& rho, int dim_a, int dim_b, Side side);

/// Largest eigenvalue of a Hermitian PSD matrix.
double operator_norm(const CMat& m);

/// Orthogonal projector onto the complement of the range of m.  Singular
/// values below tol * s_max count as zero when deciding the rank.
CMat complement_projector(const CMat& m, double tol = tol::rank_cut);

}  // namespace sepstates

#include "sepstates/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace sepstates {

bool is_finite(const CMat& m) { return m.allFinite(); }

static void require_finite(const CMat& m, const char* who) {
  if (!m.allFinite()) {
    throw invalid_input(std::string(who) + ": non-finite entries");
  }
}

static void require_hermitian(const CMat& m, const char* who) {
  if (m.rows() != m.cols()) {
    throw invalid_input(std::string(who) + ": matrix not square");
  }
  const double asym = spectral_norm(m - m.adjoint());
  if (asym > tol::hermiticity * std::max(1.0, spectral_norm(m))) {
    throw invalid_input(std::string(who) + ": matrix not Hermitian (residual " +
                        std::to_string(asym) + ")");
  }
}

double spectral_norm(const CMat& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<CMat>(m).singularValues()(0);
}

SvdResult svd(const CMat& m) {
  require_finite(m, "svd");
  Eigen::JacobiSVD<CMat> solver(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  // Eigen sorts descending; flip to the ascending convention.
  SvdResult out;
  out.singular_values = solver.singularValues().reverse();
  out.u = solver.matrixU().rowwise().reverse();
  out.v = solver.matrixV().rowwise().reverse();
  return out;
}

HermitianSpectrum hermitian_eig(const CMat& m) {
  require_finite(m, "hermitian_eig");
  require_hermitian(m, "hermitian_eig");
  const CMat sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw internal_error("hermitian_eig: eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double chi_n(const CMat& m, int n) {
  if (n < 1 || n > m.rows()) {
    throw invalid_input("chi_n: n out of range");
  }
  const HermitianSpectrum spec = hermitian_eig(m);
  return spec.eigenvalues.head(n).sum();
}

CMat kron(const CMat& a, const CMat& b) {
  require_finite(a, "kron");
  require_finite(b, "kron");
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMat partial_trace(const CMat& rho, int dim_a, int dim_b, Side side) {
  if (dim_a < 1 || dim_b < 1 ||
      rho.rows() != static_cast<Eigen::Index>(dim_a) * dim_b ||
      rho.cols() != rho.rows()) {
    throw invalid_input("partial_trace: dimension mismatch");
  }
  require_hermitian(rho, "partial_trace");
  if (side == Side::A) {
    CMat out = CMat::Zero(dim_b, dim_b);
    for (int i = 0; i < dim_a; ++i) {
      out += rho.block(i * dim_b, i * dim_b, dim_b, dim_b);
    }
    return out;
  }
  CMat out = CMat::Zero(dim_a, dim_a);
  for (int i = 0; i < dim_a; ++i) {
    for (int ip = 0; ip < dim_a; ++ip) {
      std::complex<double> s = 0.0;
      for (int j = 0; j < dim_b; ++j) {
        s += rho(i * dim_b + j, ip * dim_b + j);
      }
      out(i, ip) = s;
    }
  }
  return out;
}

double operator_norm(const CMat& m) {
  const HermitianSpectrum spec = hermitian_eig(m);
  const double lo = spec.eigenvalues(0);
  const double hi = spec.eigenvalues(spec.eigenvalues.size() - 1);
  if (lo < -tol::hermiticity * std::max(1.0, std::abs(hi))) {
    throw invalid_input("operator_norm: matrix not positive semidefinite");
  }
  return hi;
}

CMat complement_projector(const CMat& m, double tol) {
  require_finite(m, "complement_projector");
  if (tol <= 0.0) {
    throw invalid_input("complement_projector: tol must be positive");
  }
  const Eigen::Index dim = m.rows();
  Eigen::JacobiSVD<CMat> solver(m, Eigen::ComputeFullU);
  const RVec& s = solver.singularValues();
  const double cutoff = s.size() > 0 ? tol * s(0) : 0.0;
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cutoff && s(rank) > 0.0) ++rank;
  const CMat range = solver.matrixU().leftCols(rank);
  return CMat::Identity(dim, dim) - range * range.adjoint();
}

}  // namespace sepstates

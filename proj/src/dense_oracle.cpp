#include "csm/dense_oracle.hpp"

#include <stdexcept>
#include <string>

namespace csm {

namespace {

Eigen::Index dense_dimension(int n_sat) {
  if (n_sat < 1 || n_sat > kMaxDenseSatellites) {
    throw std::invalid_argument("dense oracle needs 1 <= n_sat <= " +
                                std::to_string(kMaxDenseSatellites) + ", got " +
                                std::to_string(n_sat));
  }
  return Eigen::Index{1} << (n_sat + 1);
}

}  // namespace

Eigen::MatrixXd dense_kick_hamiltonian(const DriveParams& p, int n_sat) {
  const Eigen::Index dim = dense_dimension(n_sat);
  p.validate(n_sat, Backend::Full);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    double e = 0.0;
    for (int bit = 0; bit <= n_sat; ++bit) {
      const double sz = ((idx >> bit) & 1) ? -0.5 : 0.5;
      const double field = bit == n_sat ? p.g_c : p.satellite_field(bit);
      e += 2.0 * field * sz;
    }
    h(idx, idx) = e;
  }
  return h;
}

Eigen::MatrixXd dense_interaction_hamiltonian(const DriveParams& p, int n_sat) {
  const Eigen::Index dim = dense_dimension(n_sat);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  const Eigen::Index central = Eigen::Index{1} << n_sat;
  // S_i^x S_c^x flips both bits with amplitude 1/4.
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    for (int i = 0; i < n_sat; ++i) {
      const Eigen::Index j = idx ^ central ^ (Eigen::Index{1} << i);
      h(j, idx) += -2.0 * p.lambda * 0.25;
    }
  }
  return h;
}

Eigen::MatrixXcd exp_hermitian(const Eigen::MatrixXd& h, double t) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  const Eigen::MatrixXcd v = solver.eigenvectors().cast<std::complex<double>>();
  Eigen::VectorXcd phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) {
    phases(k) = std::polar(1.0, -solver.eigenvalues()(k) * t);
  }
  return v * phases.asDiagonal() * v.adjoint();
}

Eigen::MatrixXcd dense_floquet_matrix(const DriveParams& p, int n_sat) {
  const Eigen::MatrixXcd u_d = exp_hermitian(dense_kick_hamiltonian(p, n_sat), 0.5);
  const Eigen::MatrixXcd u_0 = exp_hermitian(dense_interaction_hamiltonian(p, n_sat), 0.5);
  return u_0 * u_d;
}

}  // namespace csm

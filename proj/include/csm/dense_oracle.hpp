#pragma once

// Brute-force reference: explicit Hamiltonians in the full basis, exponentiated
// by eigendecomposition. Only meant for small systems and cross-checks.

#include <Eigen/Dense>

#include "csm/drive.hpp"

namespace csm {

inline constexpr int kMaxDenseSatellites = 12;

/// H_d = 2(sum_i g_i S_i^z + g_c S_c^z) and H_0 = -2 lambda sum_i S_i^x S_c^x.
Eigen::MatrixXd dense_kick_hamiltonian(const DriveParams& p, int n_sat);
Eigen::MatrixXd dense_interaction_hamiltonian(const DriveParams& p, int n_sat);

/// exp(-i H t) for real symmetric H.
Eigen::MatrixXcd exp_hermitian(const Eigen::MatrixXd& h, double t);

/// U_0 U_d with each half lasting T/2 = 1/2. Throws std::invalid_argument
/// for n_sat outside [1, kMaxDenseSatellites].
Eigen::MatrixXcd dense_floquet_matrix(const DriveParams& p, int n_sat);

}  // namespace csm

#include "csm/collective.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace csm {

std::vector<double> sqrt_binomial_row(int n) {
  if (n < 0) throw std::invalid_argument("negative binomial order");
  std::vector<double> row(static_cast<std::size_t>(n) + 1);
  if (n <= 60) {
    // C(n, k) * (n - k) < 2^64 for n <= 60, so the long double recurrence is
    // exact integer arithmetic.
    long double c = 1.0L;
    for (int k = 0; k <= n; ++k) {
      row[static_cast<std::size_t>(k)] = static_cast<double>(std::sqrt(c));
      c = c * static_cast<long double>(n - k) / static_cast<long double>(k + 1);
    }
  } else {
    const double ln_n = std::lgamma(n + 1.0);
    for (int k = 0; k <= n; ++k) {
      const double ln_c = ln_n - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
      row[static_cast<std::size_t>(k)] = std::exp(0.5 * ln_c);
    }
  }
  return row;
}

double collective_jx_element(int n, int k) noexcept {
  return 0.5 * std::sqrt(static_cast<double>(n - k) * static_cast<double>(k + 1));
}

namespace {

std::shared_ptr<const CollectiveRotation> build_rotation(int n) {
  using MatrixL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const int dim = n + 1;
  MatrixL jx = MatrixL::Zero(dim, dim);
  for (int k = 0; k < n; ++k) {
    const long double v =
        0.5L * std::sqrt(static_cast<long double>(n - k) * static_cast<long double>(k + 1));
    jx(k, k + 1) = v;
    jx(k + 1, k) = v;
  }
  Eigen::SelfAdjointEigenSolver<MatrixL> solver(jx);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("collective J_x diagonalization failed for n = " + std::to_string(n));
  }
  auto rot = std::make_shared<CollectiveRotation>();
  rot->n = n;
  rot->vectors.resize(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
  rot->eigenvalues.resize(static_cast<std::size_t>(dim));
  for (int a = 0; a < dim; ++a) {
    const long double exact = static_cast<long double>(a) - 0.5L * static_cast<long double>(n);
    if (std::fabs(solver.eigenvalues()(a) - exact) > 1e-9L) {
      throw std::runtime_error("collective J_x spectrum is not {-n/2..n/2}");
    }
    rot->eigenvalues[static_cast<std::size_t>(a)] = static_cast<double>(exact);
    // Fix the sign so the first significant component is positive.
    long double sign = 1.0L;
    for (int k = 0; k < dim; ++k) {
      if (std::fabs(solver.eigenvectors()(k, a)) > 1e-12L) {
        sign = solver.eigenvectors()(k, a) < 0 ? -1.0L : 1.0L;
        break;
      }
    }
    for (int k = 0; k < dim; ++k) {
      rot->vectors[static_cast<std::size_t>(k) * static_cast<std::size_t>(dim) +
                   static_cast<std::size_t>(a)] =
          static_cast<double>(sign * solver.eigenvectors()(k, a));
    }
  }
  // QR of the eigenvector matrix by adjacent-row rotations.
  MatrixL q(dim, dim);
  for (int k = 0; k < dim; ++k) {
    for (int a = 0; a < dim; ++a) q(k, a) = static_cast<long double>(rot->at(k, a));
  }
  for (int col = 0; col + 1 < dim; ++col) {
    for (int r = dim - 1; r > col; --r) {
      const long double phi = std::atan2(-q(r, col), q(r - 1, col));
      const long double c = std::cos(phi);
      const long double s = std::sin(phi);
      for (int a = col; a < dim; ++a) {
        const long double x = q(r - 1, a);
        const long double y = q(r, a);
        q(r - 1, a) = c * x - s * y;
        q(r, a) = s * x + c * y;
      }
      rot->givens.push_back({r - 1, kernels::ShearRotation::from_angle(static_cast<double>(phi))});
    }
  }
  return rot;
}

}  // namespace

std::shared_ptr<const CollectiveRotation> collective_rotation(int n) {
  if (n < 1) throw std::invalid_argument("collective rotation needs n >= 1");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CollectiveRotation>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto rot = build_rotation(n);
  cache.emplace(n, rot);
  return rot;
}

}  // namespace csm

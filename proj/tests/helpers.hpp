#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <vector>

#include "csm/drive.hpp"
#include "csm/spin_state.hpp"

namespace csm::test {

inline constexpr double kLn2 = 0.69314718055994530942;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine{20240611};
  return engine;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline SpinState random_state(int n_sat, Backend backend) {
  StateVector amps(SpinState::dimension_for(n_sat, backend));
  std::normal_distribution<double> gauss;
  for (Complex& a : amps) a = {gauss(rng()), gauss(rng())};
  SpinState s(n_sat, backend, std::move(amps));
  s.normalize();
  return s;
}

/// Independent field on every satellite.
inline DriveParams random_drive(int n_sat, double lambda) {
  std::vector<double> fields(static_cast<std::size_t>(n_sat));
  for (double& f : fields) f = uniform(0.0, 2.0 * kPi);
  DriveParams p;
  p.lambda = lambda;
  p.g_sat = fields;
  p.g_c = uniform(0.0, 2.0 * kPi);
  return p;
}

inline Eigen::VectorXcd as_vector(const SpinState& s) {
  const auto amps = s.amplitudes();
  return Eigen::Map<const Eigen::VectorXcd>(amps.data(), static_cast<Eigen::Index>(amps.size()));
}

/// Largest per-amplitude difference after removing the relative global phase.
inline double phase_aligned_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  const Complex overlap = a.dot(b);
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  return (a * phase - b).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const SpinState& a, const SpinState& b) {
  return (as_vector(a) - as_vector(b)).cwiseAbs().maxCoeff();
}

}  // namespace csm::test

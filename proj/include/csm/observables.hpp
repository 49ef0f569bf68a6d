#pragma once

#include <optional>
#include <span>

#include "csm/kernels.hpp"
#include "csm/spin_state.hpp"

namespace csm {

/// Measurements taken at one stroboscopic time. With half_period set, the
/// record belongs to t = period_index + 1/2 (just after the kick).
struct Observation {
  int period_index = 0;
  bool half_period = false;
  double m_sat = 0.0;           ///< sum_i <S_i^x>
  double m_sat_per_spin = 0.0;  ///< m_sat / n_sat
  double m_central = 0.0;       ///< <S_c^x>
  double entropy = 0.0;         ///< central-spin von Neumann entropy, nats
  double fidelity_to_initial = 0.0;

  double time() const noexcept { return period_index + (half_period ? 0.5 : 0.0); }
};

double magnetization_sat(const SpinState& state);
double magnetization_central(const SpinState& state);
kernels::CentralDensity central_density(const SpinState& state);
double entanglement_entropy_central(const SpinState& state);

/// |<a|b>|^2. A full and a symmetric state are compared in the symmetric
/// sector. Throws std::invalid_argument on an n_sat mismatch.
double fidelity(const SpinState& a, const SpinState& b);

Observation observe(const SpinState& state, const SpinState& initial, int period_index,
                    bool half_period = false);

/// (1/sqrt2)[|+x..+x>|sx> + alpha |-x..-x>|-sx>], sx = +x for branch_sign > 0
/// and -x otherwise. |alpha| must be 1.
SpinState bell_cat_state(int n_sat, int branch_sign, Complex alpha,
                         Backend backend = Backend::Full);

/// (1/sqrt2)[|+z..+z> + sign |-z..-z>] |-x>_c.
SpinState satellite_cat_state(int n_sat, int relative_sign, Backend backend = Backend::Full);

/// Smallest p with |x[n+p] - x[n]| <= tol for every n, searched up to
/// size/3. Throws on an empty series.
std::optional<int> detect_period(std::span<const double> series, double tol);

}  // namespace csm

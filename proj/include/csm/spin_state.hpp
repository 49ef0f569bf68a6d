#pragma once

#include <cstddef>
#include <span>

#include "csm/axis.hpp"
#include "csm/types.hpp"

namespace csm {

/// Largest satellite count accepted by the full backend (2^27 amplitudes).
inline constexpr int kMaxFullSatellites = 26;

/// Pure state of one central spin and n_sat satellite spins.
class SpinState {
 public:
  /// Takes ownership of the amplitudes; throws std::invalid_argument when the
  /// length does not match the backend layout.
  SpinState(int n_sat, Backend backend, StateVector amplitudes);

  int n_sat() const noexcept { return n_sat_; }
  Backend backend() const noexcept { return backend_; }
  std::size_t dimension() const noexcept { return amps_.size(); }

  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }

  double norm_squared() const noexcept;
  void normalize();
  /// Multiplies by a global phase so the first nonzero amplitude is real
  /// and positive.
  void canonicalize_phase() noexcept;

  static std::size_t dimension_for(int n_sat, Backend backend);

  /// Symmetric layout helper.
  std::size_t symmetric_index(int k, int central) const noexcept {
    return static_cast<std::size_t>(central) * static_cast<std::size_t>(n_sat_ + 1) +
           static_cast<std::size_t>(k);
  }

 private:
  int n_sat_;
  Backend backend_;
  StateVector amps_;
};

/// (sat_axis)^{n_sat} (x) central_axis, phase-canonicalized.
SpinState new_product_state(int n_sat, Axis sat_axis, Axis central_axis, Backend backend);

/// Full-backend product state with an individual axis per satellite.
SpinState product_state(std::span<const Axis> satellites, Axis central_axis);

/// Normalized a|x> + b|y>. Both states must share n_sat and backend. The
/// relative phase of x and y is kept as constructed (no canonicalization).
SpinState superpose(Complex a, const SpinState& x, Complex b, const SpinState& y);

/// <a|b>; states must share n_sat and backend.
Complex inner_product(const SpinState& a, const SpinState& b);

struct SymmetricProjection {
  SpinState state;    ///< unnormalized symmetric-sector component
  double lost_weight; ///< weight outside the permutation-symmetric sector
};

/// Projects a full-backend state onto the Dicke (permutation-symmetric)
/// sector of the satellites.
SymmetricProjection project_full_to_symmetric(const SpinState& full);

/// Inverse embedding of a symmetric-backend state into the full basis.
SpinState embed_symmetric_in_full(const SpinState& symmetric);

}  // namespace csm

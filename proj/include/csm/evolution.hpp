#pragma once

#include <memory>
#include <vector>

#include "csm/collective.hpp"
#include "csm/drive.hpp"
#include "csm/kernels.hpp"
#include "csm/spin_state.hpp"

namespace csm {

/// Which kernel family drives the full backend.
enum class Execution { Serial, Parallel };

/// Position inside a drive period: after the kick (t = nT + T/2) or after the
/// interaction (t = (n+1)T).
enum class HalfStep { AfterKick, AfterInteraction };

/// Precomputed half-period propagators for one (params, n_sat, backend).
/// Construction validates the parameters. Immutable after construction, so one
/// propagator may be shared between threads working on different states.
class FloquetPropagator {
 public:
  FloquetPropagator(const DriveParams& params, int n_sat, Backend backend,
                    Execution execution = Execution::Parallel);

  int n_sat() const noexcept { return n_sat_; }
  Backend backend() const noexcept { return backend_; }

  /// U_d = exp[-i(sum_i g_i S_i^z + g_c S_c^z)].
  void kick(SpinState& state) const;
  /// U_0 = exp[+i lambda sum_i S_i^x S_c^x].
  void interact(SpinState& state) const;
  /// U_F = U_0 U_d, one period.
  void step(SpinState& state) const;

 private:
  void check(const SpinState& state) const;

  int n_sat_;
  Backend backend_;
  Execution execution_;
  // Full backend.
  std::vector<kernels::ShearRotation> kick_low_;
  std::vector<kernels::ShearRotation> kick_high_;
  int kick_low_bits_ = 0;
  kernels::ShearRotation x_rotation_;
  // Symmetric backend.
  std::vector<kernels::ShearRotation> sym_kick_;         // indexed like the state
  std::vector<kernels::ShearRotation> sym_interaction_;  // [c][a] phases in the x eigenbasis
  std::shared_ptr<const CollectiveRotation> rotation_;
};

SpinState apply_kick(SpinState state, const DriveParams& params,
                     Execution execution = Execution::Parallel);
SpinState apply_interaction(SpinState state, const DriveParams& params,
                            Execution execution = Execution::Parallel);
SpinState floquet_step(SpinState state, const DriveParams& params,
                       Execution execution = Execution::Parallel);

/// Applies `periods` full Floquet periods.
SpinState evolve(SpinState state, const DriveParams& params, int periods,
                 Execution execution = Execution::Parallel);

}  // namespace csm

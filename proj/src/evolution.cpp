#include "csm/evolution.hpp"

#include <stdexcept>
#include <string>

#include "csm/kernels.hpp"

namespace csm {

namespace {

// Field felt by spin `bit` of the full layout (central spin on bit n_sat).
double field_on_bit(const DriveParams& p, int n_sat, int bit) {
  return bit == n_sat ? p.g_c : p.satellite_field(bit);
}

// exp[-i sum_{bits in range} g_bit (1/2 - b_bit)] for every pattern of the range.
std::vector<kernels::ShearRotation> kick_table(const DriveParams& p, int n_sat, int first_bit,
                                               int bits) {
  std::vector<kernels::ShearRotation> table(std::size_t{1} << bits);
  for (std::size_t pattern = 0; pattern < table.size(); ++pattern) {
    double angle = 0.0;
    for (int j = 0; j < bits; ++j) {
      const double sz = ((pattern >> j) & 1U) ? -0.5 : 0.5;
      angle += field_on_bit(p, n_sat, first_bit + j) * sz;
    }
    table[pattern] = kernels::ShearRotation::from_angle(-angle);
  }
  return table;
}

}  // namespace

FloquetPropagator::FloquetPropagator(const DriveParams& params, int n_sat, Backend backend,
                                     Execution execution)
    : n_sat_(n_sat), backend_(backend), execution_(execution) {
  SpinState::dimension_for(n_sat, backend);  // validates n_sat
  params.validate(n_sat, backend);

  if (backend == Backend::Full) {
    const int total_bits = n_sat + 1;
    kick_low_bits_ = total_bits / 2;
    kick_low_ = kick_table(params, n_sat, 0, kick_low_bits_);
    kick_high_ = kick_table(params, n_sat, kick_low_bits_, total_bits - kick_low_bits_);
    x_rotation_ = kernels::ShearRotation::from_angle(params.lambda / 4.0);
    return;
  }

  const double g_s = params.satellite_field(0);
  const std::size_t levels = static_cast<std::size_t>(n_sat) + 1;
  sym_kick_.resize(2 * levels);
  sym_interaction_.resize(2 * levels);
  rotation_ = collective_rotation(n_sat);
  for (int c = 0; c < 2; ++c) {
    const double sc = c == 0 ? 0.5 : -0.5;
    for (int k = 0; k <= n_sat; ++k) {
      const double jz = 0.5 * n_sat - k;
      sym_kick_[static_cast<std::size_t>(c) * levels + static_cast<std::size_t>(k)] =
          kernels::ShearRotation::from_angle(-(g_s * jz + params.g_c * sc));
    }
    for (int a = 0; a <= n_sat; ++a) {
      sym_interaction_[static_cast<std::size_t>(c) * levels + static_cast<std::size_t>(a)] =
          kernels::ShearRotation::from_angle(params.lambda * sc *
                                             rotation_->eigenvalues[static_cast<std::size_t>(a)]);
    }
  }
}

void FloquetPropagator::check(const SpinState& state) const {
  if (state.n_sat() != n_sat_ || state.backend() != backend_) {
    throw std::invalid_argument("state (n_sat " + std::to_string(state.n_sat()) + ", " +
                                backend_name(state.backend()) +
                                ") does not match propagator (n_sat " + std::to_string(n_sat_) +
                                ", " + backend_name(backend_) + ")");
  }
}

void FloquetPropagator::kick(SpinState& state) const {
  check(state);
  auto amps = state.amplitudes();
  if (backend_ == Backend::Full) {
    const kernels::SplitDiagonal diag{kick_low_, kick_high_, kick_low_bits_};
    if (execution_ == Execution::Serial) {
      kernels::serial::apply_diagonal(amps, diag);
    } else {
      kernels::parallel::apply_diagonal(amps, diag);
    }
    return;
  }
  for (std::size_t i = 0; i < amps.size(); ++i) sym_kick_[i].apply_phase(amps[i]);
}

void FloquetPropagator::interact(SpinState& state) const {
  check(state);
  auto amps = state.amplitudes();
  if (backend_ == Backend::Full) {
    if (execution_ == Execution::Serial) {
      kernels::serial::apply_conditional_x_rotation(amps, n_sat_, x_rotation_);
    } else {
      kernels::parallel::apply_conditional_x_rotation(amps, n_sat_, x_rotation_);
    }
    return;
  }

  // Central spin to the x basis (unnormalized), satellites to the J_x
  // eigenbasis, diagonal phase, and back.
  const std::size_t levels = static_cast<std::size_t>(n_sat_) + 1;
  Complex* up = amps.data();
  Complex* down = amps.data() + levels;
  for (std::size_t k = 0; k < levels; ++k) {
    const Complex a = up[k];
    const Complex b = down[k];
    up[k] = a + b;
    down[k] = a - b;
  }
  const std::vector<Givens>& givens = rotation_->givens;
  for (int c = 0; c < 2; ++c) {
    Complex* branch = c == 0 ? up : down;
    for (const Givens& g : givens) g.apply(branch);
    const kernels::ShearRotation* phases =
        sym_interaction_.data() + static_cast<std::size_t>(c) * levels;
    for (std::size_t a = 0; a < levels; ++a) phases[a].apply_phase(branch[a]);
    for (auto g = givens.rbegin(); g != givens.rend(); ++g) g->apply_inverse(branch);
  }
  for (std::size_t k = 0; k < levels; ++k) {
    const Complex a = up[k];
    const Complex b = down[k];
    up[k] = 0.5 * (a + b);
    down[k] = 0.5 * (a - b);
  }
}

void FloquetPropagator::step(SpinState& state) const {
  if (backend_ == Backend::Full) {
    check(state);
    const kernels::SplitDiagonal diag{kick_low_, kick_high_, kick_low_bits_};
    if (execution_ == Execution::Serial) {
      kernels::serial::floquet_period(state.amplitudes(), n_sat_, diag, x_rotation_);
    } else {
      kernels::parallel::floquet_period(state.amplitudes(), n_sat_, diag, x_rotation_);
    }
    return;
  }
  kick(state);
  interact(state);
}

SpinState apply_kick(SpinState state, const DriveParams& params, Execution execution) {
  FloquetPropagator(params, state.n_sat(), state.backend(), execution).kick(state);
  return state;
}

SpinState apply_interaction(SpinState state, const DriveParams& params, Execution execution) {
  FloquetPropagator(params, state.n_sat(), state.backend(), execution).interact(state);
  return state;
}

SpinState floquet_step(SpinState state, const DriveParams& params, Execution execution) {
  FloquetPropagator(params, state.n_sat(), state.backend(), execution).step(state);
  return state;
}

SpinState evolve(SpinState state, const DriveParams& params, int periods, Execution execution) {
  if (periods < 0) throw std::invalid_argument("negative period count");
  const FloquetPropagator prop(params, state.n_sat(), state.backend(), execution);
  for (int n = 0; n < periods; ++n) prop.step(state);
  return state;
}

}  // namespace csm

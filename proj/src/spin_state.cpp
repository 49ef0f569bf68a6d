#include "csm/spin_state.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "csm/collective.hpp"

namespace csm {

namespace {

void require_same_space(const SpinState& a, const SpinState& b) {
  if (a.n_sat() != b.n_sat() || a.backend() != b.backend()) {
    throw std::invalid_argument("states live in different spaces (n_sat " +
                                std::to_string(a.n_sat()) + "/" + backend_name(a.backend()) +
                                " vs " + std::to_string(b.n_sat()) + "/" +
                                backend_name(b.backend()) + ")");
  }
}

Complex ipow(Complex base, int exponent) {
  Complex result{1.0, 0.0};
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

std::size_t SpinState::dimension_for(int n_sat, Backend backend) {
  if (n_sat < 1) throw std::invalid_argument("n_sat must be at least 1");
  if (backend == Backend::Full) {
    if (n_sat > kMaxFullSatellites) {
      throw std::invalid_argument("full backend supports at most " +
                                  std::to_string(kMaxFullSatellites) + " satellites, got " +
                                  std::to_string(n_sat));
    }
    return std::size_t{1} << (n_sat + 1);
  }
  return 2 * (static_cast<std::size_t>(n_sat) + 1);
}

SpinState::SpinState(int n_sat, Backend backend, StateVector amplitudes)
    : n_sat_(n_sat), backend_(backend), amps_(std::move(amplitudes)) {
  const std::size_t expected = dimension_for(n_sat, backend);
  if (amps_.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) + " amplitudes, got " +
                                std::to_string(amps_.size()));
  }
}

double SpinState::norm_squared() const noexcept {
  double total = 0.0;
  for (const Complex& a : amps_) total += std::norm(a);
  return total;
}

void SpinState::normalize() {
  const double n2 = norm_squared();
  if (!(n2 > 0.0)) throw std::domain_error("cannot normalize a zero state");
  const double inv = 1.0 / std::sqrt(n2);
  for (Complex& a : amps_) a *= inv;
}

void SpinState::canonicalize_phase() noexcept {
  for (const Complex& a : amps_) {
    const double mag = std::abs(a);
    if (mag > 1e-14) {
      const Complex rot = std::conj(a) / mag;
      for (Complex& b : amps_) b *= rot;
      return;
    }
  }
}

SpinState new_product_state(int n_sat, Axis sat_axis, Axis central_axis, Backend backend) {
  const std::size_t dim = SpinState::dimension_for(n_sat, backend);
  const Spinor sat = spinor(sat_axis);
  const Spinor cen = spinor(central_axis);
  StateVector amps(dim);
  if (backend == Backend::Full) {
    const std::size_t half = dim / 2;
    for (std::size_t b = 0; b < half; ++b) {
      const int down = std::popcount(b);
      const Complex sat_amp = ipow(sat.up, n_sat - down) * ipow(sat.down, down);
      amps[b] = sat_amp * cen.up;
      amps[b + half] = sat_amp * cen.down;
    }
  } else {
    const std::vector<double> sqrt_c = sqrt_binomial_row(n_sat);
    for (int k = 0; k <= n_sat; ++k) {
      const Complex sat_amp = sqrt_c[static_cast<std::size_t>(k)] *
                              ipow(sat.up, n_sat - k) * ipow(sat.down, k);
      amps[static_cast<std::size_t>(k)] = sat_amp * cen.up;
      amps[static_cast<std::size_t>(k + n_sat + 1)] = sat_amp * cen.down;
    }
  }
  SpinState state(n_sat, backend, std::move(amps));
  state.normalize();
  state.canonicalize_phase();
  return state;
}

SpinState product_state(std::span<const Axis> satellites, Axis central_axis) {
  const int n_sat = static_cast<int>(satellites.size());
  const std::size_t dim = SpinState::dimension_for(n_sat, Backend::Full);
  StateVector amps(dim, Complex{1.0, 0.0});
  for (std::size_t b = 0; b < dim; ++b) {
    for (int i = 0; i <= n_sat; ++i) {
      const Spinor sp = spinor(i < n_sat ? satellites[static_cast<std::size_t>(i)] : central_axis);
      amps[b] *= ((b >> i) & 1U) ? sp.down : sp.up;
    }
  }
  SpinState state(n_sat, Backend::Full, std::move(amps));
  state.canonicalize_phase();
  return state;
}

SpinState superpose(Complex a, const SpinState& x, Complex b, const SpinState& y) {
  require_same_space(x, y);
  StateVector amps(x.dimension());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    amps[i] = a * x.amplitudes()[i] + b * y.amplitudes()[i];
  }
  SpinState out(x.n_sat(), x.backend(), std::move(amps));
  out.normalize();
  return out;
}

Complex inner_product(const SpinState& a, const SpinState& b) {
  require_same_space(a, b);
  Complex total{0.0, 0.0};
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    total += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  }
  return total;
}

SymmetricProjection project_full_to_symmetric(const SpinState& full) {
  if (full.backend() != Backend::Full) {
    throw std::invalid_argument("project_full_to_symmetric expects a full-backend state");
  }
  const int n = full.n_sat();
  const std::size_t half = std::size_t{1} << n;
  StateVector sums(2 * (static_cast<std::size_t>(n) + 1));
  for (int c = 0; c < 2; ++c) {
    for (std::size_t b = 0; b < half; ++b) {
      sums[static_cast<std::size_t>(c * (n + 1) + std::popcount(b))] +=
          full.amplitudes()[b + static_cast<std::size_t>(c) * half];
    }
  }
  const std::vector<double> sqrt_c = sqrt_binomial_row(n);
  double kept = 0.0;
  for (int c = 0; c < 2; ++c) {
    for (int k = 0; k <= n; ++k) {
      Complex& s = sums[static_cast<std::size_t>(c * (n + 1) + k)];
      s /= sqrt_c[static_cast<std::size_t>(k)];
      kept += std::norm(s);
    }
  }
  const double lost = full.norm_squared() - kept;
  return {SpinState(n, Backend::Symmetric, std::move(sums)), lost < 0.0 ? 0.0 : lost};
}

SpinState embed_symmetric_in_full(const SpinState& symmetric) {
  if (symmetric.backend() != Backend::Symmetric) {
    throw std::invalid_argument("embed_symmetric_in_full expects a symmetric-backend state");
  }
  const int n = symmetric.n_sat();
  const std::size_t half = std::size_t{1} << n;
  const std::vector<double> sqrt_c = sqrt_binomial_row(n);
  StateVector amps(SpinState::dimension_for(n, Backend::Full));
  for (int c = 0; c < 2; ++c) {
    for (std::size_t b = 0; b < half; ++b) {
      const int k = std::popcount(b);
      amps[b + static_cast<std::size_t>(c) * half] =
          symmetric.amplitudes()[symmetric.symmetric_index(k, c)] /
          sqrt_c[static_cast<std::size_t>(k)];
    }
  }
  return SpinState(n, Backend::Full, std::move(amps));
}

}  // namespace csm

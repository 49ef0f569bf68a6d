#include "csm/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "csm/collective.hpp"

namespace csm {

double magnetization_sat(const SpinState& state) {
  const auto amps = state.amplitudes();
  const int n = state.n_sat();
  if (state.backend() == Backend::Full) return kernels::parallel::satellite_sx_sum(amps, n);
  // <J_x> in the Dicke basis: 2 Re(conj(psi_k) psi_{k+1}) <k|J_x|k+1>.
  double total = 0.0;
  for (int c = 0; c < 2; ++c) {
    for (int k = 0; k < n; ++k) {
      const Complex a = amps[state.symmetric_index(k, c)];
      const Complex b = amps[state.symmetric_index(k + 1, c)];
      total += 2.0 * (std::conj(a) * b).real() * collective_jx_element(n, k);
    }
  }
  return total;
}

kernels::CentralDensity central_density(const SpinState& state) {
  const auto amps = state.amplitudes();
  if (state.backend() == Backend::Full) {
    return kernels::parallel::central_density(amps, state.n_sat());
  }
  kernels::CentralDensity rho{0.0, 0.0, {0.0, 0.0}};
  for (int k = 0; k <= state.n_sat(); ++k) {
    const Complex up = amps[state.symmetric_index(k, 0)];
    const Complex down = amps[state.symmetric_index(k, 1)];
    rho.rho_up += std::norm(up);
    rho.rho_down += std::norm(down);
    rho.coherence += up * std::conj(down);
  }
  return rho;
}

double magnetization_central(const SpinState& state) {
  return central_density(state).coherence.real();
}

double entanglement_entropy_central(const SpinState& state) {
  const kernels::CentralDensity rho = central_density(state);
  const double trace = rho.rho_up + rho.rho_down;
  if (!(trace > 0.0)) throw std::domain_error("entropy of a zero state");
  const double diff = (rho.rho_up - rho.rho_down) / trace;
  const double coh = std::abs(rho.coherence) / trace;
  const double r = std::sqrt(diff * diff + 4.0 * coh * coh);
  double s = 0.0;
  for (double p : {0.5 * (1.0 + r), 0.5 * (1.0 - r)}) {
    p = std::clamp(p, 0.0, 1.0);
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

double fidelity(const SpinState& a, const SpinState& b) {
  if (a.n_sat() != b.n_sat()) {
    throw std::invalid_argument("fidelity between states with " + std::to_string(a.n_sat()) +
                                " and " + std::to_string(b.n_sat()) + " satellites");
  }
  if (a.backend() == b.backend()) return std::norm(inner_product(a, b));
  const SpinState& full = a.backend() == Backend::Full ? a : b;
  const SpinState& sym = a.backend() == Backend::Full ? b : a;
  return std::norm(inner_product(sym, project_full_to_symmetric(full).state));
}

Observation observe(const SpinState& state, const SpinState& initial, int period_index,
                    bool half_period) {
  Observation o;
  o.period_index = period_index;
  o.half_period = half_period;
  o.m_sat = magnetization_sat(state);
  o.m_sat_per_spin = o.m_sat / state.n_sat();
  o.m_central = magnetization_central(state);
  o.entropy = entanglement_entropy_central(state);
  o.fidelity_to_initial = fidelity(state, initial);
  return o;
}

SpinState bell_cat_state(int n_sat, int branch_sign, Complex alpha, Backend backend) {
  if (std::abs(std::abs(alpha) - 1.0) > 1e-12) {
    throw std::invalid_argument("Bell-cat weight alpha must have unit modulus");
  }
  const Axis c_first = branch_sign > 0 ? Axis::PlusX : Axis::MinusX;
  const SpinState first = new_product_state(n_sat, Axis::PlusX, c_first, backend);
  const SpinState second = new_product_state(n_sat, Axis::MinusX, opposite(c_first), backend);
  return superpose({1.0, 0.0}, first, alpha, second);
}

SpinState satellite_cat_state(int n_sat, int relative_sign, Backend backend) {
  const SpinState up = new_product_state(n_sat, Axis::PlusZ, Axis::MinusX, backend);
  const SpinState down = new_product_state(n_sat, Axis::MinusZ, Axis::MinusX, backend);
  return superpose({1.0, 0.0}, up, {relative_sign > 0 ? 1.0 : -1.0, 0.0}, down);
}

std::optional<int> detect_period(std::span<const double> series, double tol) {
  if (series.empty()) throw std::invalid_argument("empty series");
  const std::size_t len = series.size();
  for (std::size_t p = 1; p <= len / 3; ++p) {
    bool ok = true;
    for (std::size_t n = 0; n + p < len && ok; ++n) {
      ok = std::abs(series[n + p] - series[n]) <= tol;
    }
    if (ok) return static_cast<int>(p);
  }
  return std::nullopt;
}

}  // namespace csm

#include "csm/protocol.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "csm/metrology.hpp"

namespace csm {

namespace {

std::vector<double> pick(const Trajectory& traj, double Observation::*field) {
  std::vector<double> out;
  out.reserve(traj.records.size());
  for (const Observation& o : traj.records) {
    if (!o.half_period) out.push_back(o.*field);
  }
  return out;
}

}  // namespace

std::vector<Observation> Trajectory::stroboscopic() const {
  std::vector<Observation> out;
  out.reserve(records.size());
  for (const Observation& o : records) {
    if (!o.half_period) out.push_back(o);
  }
  return out;
}

std::vector<double> Trajectory::m_sat_series() const { return pick(*this, &Observation::m_sat); }
std::vector<double> Trajectory::m_central_series() const {
  return pick(*this, &Observation::m_central);
}
std::vector<double> Trajectory::entropy_series() const {
  return pick(*this, &Observation::entropy);
}

SpinState run_steps(const DriveParams& p, SpinState state, int n_periods, const StepVisitor& visit,
                    Execution execution) {
  if (n_periods < 0) throw std::invalid_argument("negative period count");
  const FloquetPropagator prop(p, state.n_sat(), state.backend(), execution);
  for (int n = 0; n < n_periods; ++n) {
    prop.kick(state);
    if (visit) visit(state, n, HalfStep::AfterKick);
    prop.interact(state);
    if (visit) visit(state, n + 1, HalfStep::AfterInteraction);
  }
  return state;
}

Trajectory run_trajectory(const DriveParams& p, const SpinState& initial, int n_periods,
                          bool sample_half_periods, std::string initial_label,
                          Execution execution) {
  if (n_periods < 1) throw std::invalid_argument("a trajectory needs at least one period");
  Trajectory traj{p, initial.n_sat(), initial.backend(), std::move(initial_label), {}};
  traj.records.reserve(static_cast<std::size_t>(n_periods) * (sample_half_periods ? 2 : 1) + 1);
  traj.records.push_back(observe(initial, initial, 0));
  run_steps(
      p, initial, n_periods,
      [&](const SpinState& s, int n, HalfStep where) {
        const bool half = where == HalfStep::AfterKick;
        if (half && !sample_half_periods) return;
        traj.records.push_back(observe(s, initial, n, half));
      },
      execution);
  return traj;
}

SpinState polarized_initial_state(int n_sat, Backend backend) {
  return new_product_state(n_sat, Axis::PlusX, Axis::PlusX, backend);
}

double time_avg_magnetization(const DriveParams& p, int n_sat, Backend backend, int window,
                              Execution execution) {
  if (window < 1) throw std::invalid_argument("averaging window must be positive");
  SpinState state = polarized_initial_state(n_sat, backend);
  const FloquetPropagator prop(p, n_sat, backend, execution);
  double sum = 0.0;
  for (int n = 1; n <= window; ++n) {
    prop.step(state);
    prop.step(state);
    sum += magnetization_sat(state);
  }
  return sum / window / n_sat;
}

OrderParams order_parameter_O(std::span<const double> m, int window) {
  if (window < 1) throw std::invalid_argument("averaging window must be positive");
  if (m.size() < static_cast<std::size_t>(window) + 1) {
    throw std::invalid_argument("order parameter needs " + std::to_string(window) +
                                " periods, trajectory has " +
                                std::to_string(m.empty() ? 0 : m.size() - 1));
  }
  OrderParams out;
  out.window = window;
  for (int n = 1; n <= window; ++n) {
    const double v = m[static_cast<std::size_t>(n)];
    out.o_dtc_bar += (n % 2 == 0 ? v : -v);
    out.o_dmf_bar += v;
  }
  out.o_dtc_bar /= window;
  out.o_dmf_bar /= window;
  out.o_bar = out.o_dtc_bar - out.o_dmf_bar;
  return out;
}

OrderParams order_parameter_O(const Trajectory& traj, int window) {
  std::vector<double> m = traj.m_sat_series();
  for (double& v : m) v /= traj.n_sat;
  return order_parameter_O(m, window);
}

ZWindow default_z_window(int n_sat) noexcept {
  return n_sat % 2 == 0 ? ZWindow{6, 200} : ZWindow{12, 100};
}

double order_parameter_Z(const DriveParams& p, int n_sat, Backend backend,
                         std::optional<ZWindow> window, Execution execution) {
  const ZWindow w = window.value_or(default_z_window(n_sat));
  if (w.stride < 1 || w.count < 1) throw std::invalid_argument("Z window must be positive");
  SpinState state = polarized_initial_state(n_sat, backend);
  const FloquetPropagator prop(p, n_sat, backend, execution);
  double sum = 0.0;
  for (int n = 1; n <= w.count; ++n) {
    for (int s = 0; s < w.stride; ++s) prop.step(state);
    const double m = magnetization_sat(state) / n_sat;
    sum += n % 2 == 0 ? m : -m;
  }
  return sum / w.count;
}

SweepQuantity parse_sweep_quantity(std::string_view text) {
  if (text == "M_bar" || text == "m") return SweepQuantity::MBar;
  if (text == "O_bar" || text == "o") return SweepQuantity::OBar;
  if (text == "Z_bar" || text == "z") return SweepQuantity::ZBar;
  if (text == "G" || text == "g") return SweepQuantity::G;
  throw std::invalid_argument("unknown quantity '" + std::string(text) +
                              "' (expected M_bar, O_bar, Z_bar or G)");
}

const char* sweep_quantity_name(SweepQuantity q) noexcept {
  switch (q) {
    case SweepQuantity::MBar:
      return "M_bar";
    case SweepQuantity::OBar:
      return "O_bar";
    case SweepQuantity::ZBar:
      return "Z_bar";
    case SweepQuantity::G:
      return "G";
  }
  return "?";
}

std::vector<double> GridAxis::values() const {
  if (count < 1) throw std::invalid_argument("grid axis needs at least one point");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] =
        count == 1 ? start : start + (stop - start) * static_cast<double>(i) / (count - 1);
  }
  if (count > 1) out.back() = stop;
  return out;
}

int SweepResult::failures() const noexcept {
  int n = 0;
  for (const SweepCell& c : cells) n += c.value.has_value() ? 0 : 1;
  return n;
}

double evaluate_cell(const SweepSpec& spec, double lambda, double g, Execution execution) {
  const DriveParams p = DriveParams::uniform(lambda, g);
  const Backend backend = resolve_backend(spec.backend, p, spec.n_sat);
  switch (spec.quantity) {
    case SweepQuantity::MBar:
      return time_avg_magnetization(p, spec.n_sat, backend, spec.m_window, execution);
    case SweepQuantity::OBar: {
      const Trajectory traj = run_trajectory(p, polarized_initial_state(spec.n_sat, backend),
                                             spec.o_window, false, "+x", execution);
      return order_parameter_O(traj, spec.o_window).o_bar;
    }
    case SweepQuantity::ZBar:
      return order_parameter_Z(p, spec.n_sat, backend, spec.z_window, execution);
    case SweepQuantity::G: {
      const QfiMatrix q = qfi_matrix(lambda, g, spec.qfi_periods, spec.n_sat, spec.qfi_delta,
                                     spec.backend, execution);
      if (std::isnan(q.g_bound)) throw std::domain_error(q.diagnostic);
      return q.g_bound;
    }
  }
  throw std::logic_error("unhandled sweep quantity");
}

SweepResult sweep_grid(const SweepSpec& spec) {
  if (spec.n_sat < 1) throw std::invalid_argument("n_sat must be at least 1");
  const std::vector<double> lambdas = spec.lambda.values();
  const std::vector<double> gs = spec.g.values();
  SweepResult result{spec, {}};
  result.cells.resize(lambdas.size() * gs.size());
  // The kernel family depends only on the grid size, never on the thread
  // count, so the output is reproducible bit for bit.
  const Execution execution = result.cells.size() > 1 ? Execution::Serial : Execution::Parallel;
  const auto n_cells = static_cast<long long>(result.cells.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long idx = 0; idx < n_cells; ++idx) {
    SweepCell& cell = result.cells[static_cast<std::size_t>(idx)];
    cell.lambda = lambdas[static_cast<std::size_t>(idx) / gs.size()];
    cell.g = gs[static_cast<std::size_t>(idx) % gs.size()];
    try {
      cell.value = evaluate_cell(spec, cell.lambda, cell.g, execution);
    } catch (const std::exception& e) {
      cell.error = e.what();
    }
  }
  return result;
}

}  // namespace csm

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "csm/drive.hpp"
#include "csm/evolution.hpp"
#include "csm/observables.hpp"

namespace csm {

/// Stroboscopic record of one run. records[0] is the initial state (n = 0);
/// half-period samples, when requested, sit between the period records.
struct Trajectory {
  DriveParams params;
  int n_sat = 0;
  Backend backend = Backend::Full;
  std::string initial;
  std::vector<Observation> records;

  /// Full-period records only, in order.
  std::vector<Observation> stroboscopic() const;
  std::vector<double> m_sat_series() const;
  std::vector<double> m_central_series() const;
  std::vector<double> entropy_series() const;
};

/// Called with the state after each half step. `period_index` is n for the
/// kick of period n+1 (t = n + 1/2) and n+1 after the interaction.
using StepVisitor = std::function<void(const SpinState&, int period_index, HalfStep where)>;

/// Runs n_periods Floquet periods from `state`, calling `visit` after every half step.
SpinState run_steps(const DriveParams& p, SpinState state, int n_periods, const StepVisitor& visit,
                    Execution execution = Execution::Parallel);

/// Throws std::invalid_argument for n_periods < 1.
Trajectory run_trajectory(const DriveParams& p, const SpinState& initial, int n_periods,
                          bool sample_half_periods = false, std::string initial_label = "",
                          Execution execution = Execution::Parallel);

/// Fully +x-polarized start used by all phase diagrams and metrology.
SpinState polarized_initial_state(int n_sat, Backend backend);

inline constexpr int kDefaultMagnetizationWindow = 500;
inline constexpr int kDefaultOrderWindow = 1000;

/// (1/N) sum_{n=1}^{N} M(2nT)/n_sat from the +x state.
double time_avg_magnetization(const DriveParams& p, int n_sat, Backend backend,
                              int window = kDefaultMagnetizationWindow,
                              Execution execution = Execution::Parallel);

struct OrderParams {
  double o_bar = 0.0;      ///< mean of (-1)^n m(n) - m(n)
  double o_dtc_bar = 0.0;  ///< mean of (-1)^n m(n)
  double o_dmf_bar = 0.0;  ///< mean of m(n)
  double z_bar = 0.0;
  int window = 0;
  int stride = 0;
  int count = 0;
};

/// Averages over n = 1..window of the per-spin magnetization. Throws when
/// the trajectory holds fewer periods.
OrderParams order_parameter_O(const Trajectory& traj, int window = kDefaultOrderWindow);
OrderParams order_parameter_O(std::span<const double> m_per_spin, int window);

struct ZWindow {
  int stride;
  int count;
};
/// (stride 6, count 200) for even n_sat and (12, 100) for odd n_sat.
ZWindow default_z_window(int n_sat) noexcept;

/// (1/count) sum_{n=1}^{count} (-1)^n M(stride*n*T)/n_sat from the +x state.
double order_parameter_Z(const DriveParams& p, int n_sat, Backend backend,
                         std::optional<ZWindow> window = std::nullopt,
                         Execution execution = Execution::Parallel);

enum class SweepQuantity { MBar, OBar, ZBar, G };
SweepQuantity parse_sweep_quantity(std::string_view text);
const char* sweep_quantity_name(SweepQuantity q) noexcept;

/// count evenly spaced values from start to stop inclusive (count 1: start).
struct GridAxis {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  std::vector<double> values() const;
};

struct SweepSpec {
  GridAxis lambda{0.0, 4.0 * kPi, 101};
  GridAxis g{0.0, 2.0 * kPi, 101};
  int n_sat = 1;
  SweepQuantity quantity = SweepQuantity::MBar;
  BackendChoice backend = BackendChoice::Auto;
  int m_window = kDefaultMagnetizationWindow;
  int o_window = kDefaultOrderWindow;
  std::optional<ZWindow> z_window;
  int qfi_periods = 100;
  double qfi_delta = 1e-4;
};

struct SweepCell {
  double lambda = 0.0;
  double g = 0.0;
  std::optional<double> value;
  std::string error;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepCell> cells;  ///< row-major, lambda outer

  int failures() const noexcept;
};

/// Evaluates one cell with g_s = g_c = g.
double evaluate_cell(const SweepSpec& spec, double lambda, double g, Execution execution);

/// Cells run in parallel; a failing cell records its message and the sweep
/// goes on.
SweepResult sweep_grid(const SweepSpec& spec);

}  // namespace csm

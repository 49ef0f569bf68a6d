#pragma once

#include <span>
#include <string>
#include <vector>

#include "csm/drive.hpp"
#include "csm/evolution.hpp"

namespace csm {

inline constexpr double kDefaultQfiDelta = 1e-4;

/// Fisher information in (lambda, g) of the +x state after n_periods periods,
/// with g_s = g_c = g.
struct QfiMatrix {
  double f_ll = 0.0;
  double f_gg = 0.0;
  double f_lg = 0.0;
  double f_gl = 0.0;
  /// det(F)/tr(F) = 1/tr(F^-1), the equal-weight joint precision. NaN when tr(F) = 0.
  double g_bound = 0.0;
  bool singular = false;
  std::string diagnostic;

  double lambda = 0.0;
  double g = 0.0;
  int n_periods = 0;
  int n_sat = 0;
  double delta = 0.0;
  Backend backend = Backend::Full;
};

struct JointBound {
  double value;
  bool singular;  ///< det < 1e-12 tr^2
  std::string diagnostic;
};
JointBound joint_bound(double f_ll, double f_gg, double f_lg, double f_gl);

/// Central differences of step delta. Throws std::invalid_argument for
/// delta <= 0 or n_periods < 0.
QfiMatrix qfi_matrix(double lambda, double g, int n_periods, int n_sat,
                     double delta = kDefaultQfiDelta, BackendChoice backend = BackendChoice::Auto,
                     Execution execution = Execution::Parallel);

struct ScalingPoint {
  double size;
  double value;
};

struct ScalingFit {
  double exponent = 0.0;
  double prefactor = 0.0;
  double r_squared = 0.0;
  /// r_squared >= kReliableFit; below it the exponent is not a scaling claim.
  bool reliable = false;
  std::vector<ScalingPoint> points;
};

inline constexpr double kReliableFit = 0.95;

/// Least squares of ln(value) on ln(size). Needs at least 4 points with
/// positive size and value.
ScalingFit scaling_fit(std::span<const ScalingPoint> points);

struct QfiScanRow {
  double lambda = 0.0;
  bool ok = false;
  QfiMatrix qfi;
  double z_bar = 0.0;
  bool ho_dtc = false;  ///< |z_bar| >= kHoDtcThreshold
  std::string error;
};

inline constexpr double kHoDtcThreshold = 0.25;

std::vector<QfiScanRow> qfi_lambda_scan(std::span<const double> lambdas, double g, int n_periods,
                                        int n_sat, double delta = kDefaultQfiDelta,
                                        BackendChoice backend = BackendChoice::Auto);

/// Interior points strictly above or below both neighbours, with runs of
/// equal values merged first.
int count_local_extrema(std::span<const double> values);

}  // namespace csm

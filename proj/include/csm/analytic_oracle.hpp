#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csm/drive.hpp"
#include "csm/spin_state.hpp"

namespace csm {

/// Two-period propagator at lambda = 2pi: the identity for odd n_sat and
/// exp[-i angle S_c^z] on the central spin for even n_sat.
struct EchoPrediction {
  enum class Kind { Identity, CentralPhase };
  Kind kind = Kind::Identity;
  double angle = 0.0;

  SpinState apply(SpinState state) const;
  std::string describe() const;
};

EchoPrediction echo_prediction(int n_sat, double g_c);

/// Which closed forms to use for the lambda = pi, g = pi/2 sequence.
/// Tabulated: the reference state list taken verbatim. Derived: the forms that follow from
/// the drive as defined here; they differ at t = T, 3T/2, 2T (except
/// n_sat = 4n+2) and for the even-n_sat cats at 3T.
enum class OracleTable { Derived, Tabulated };
const char* oracle_table_name(OracleTable table) noexcept;

/// Times are counted in half periods: 3 means t = 3T/2.
struct OraclePrediction {
  int n_sat = 0;
  int n_class = 0;  ///< n_sat mod 4
  int half_periods = 0;
  OracleTable table = OracleTable::Derived;
  std::string formula;
  bool bell_cat = false;  ///< maximally entangled two-branch cat
  SpinState state;
};

/// {2, 3, 4, 6, 12, 24, 48} plus {7, 8} for odd n_sat.
std::vector<int> tabulated_half_periods(int n_sat);

/// Throws std::invalid_argument for a time outside tabulated_half_periods.
OraclePrediction hodtc_state_at(int n_sat, int half_periods,
                                OracleTable table = OracleTable::Derived,
                                Backend backend = Backend::Full);

struct PredictedPeriods {
  int m_sat;
  int m_central;
  int entropy;
};

/// (24, 8, 4) for odd n_sat, (12, 12, 6) for even.
PredictedPeriods predicted_periods(int n_sat) noexcept;

struct OracleCheckRow {
  int n_sat = 0;
  int n_class = 0;
  int half_periods = 0;
  std::string formula;
  double fidelity = 0.0;            ///< against the derived form
  double tabulated_fidelity = 0.0;  ///< against the tabulated form
  double entropy = 0.0;             ///< of the simulated state
  bool bell_cat = false;
  bool pass = false;  ///< |1 - fidelity| <= tol, and entropy = ln 2 at cat times
};

/// Simulates lambda = pi, g = pi/2 from the +x state for each n_sat and
/// compares every tabulated time.
std::vector<OracleCheckRow> oracle_check(std::span<const int> n_sats, double tol = 1e-10,
                                         BackendChoice backend = BackendChoice::Auto);

std::string format_half_periods(int half_periods);

}  // namespace csm

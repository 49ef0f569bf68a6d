#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "csm/types.hpp"

namespace csm {

/// One Floquet cycle with T = 1: a kick exp[-i(sum_i g_i S_i^z + g_c S_c^z)]
/// for the first half period, then exp[+i lambda sum_i S_i^x S_c^x].
struct DriveParams {
  double lambda = 0.0;
  /// Either one field shared by all satellites or one field per satellite.
  std::variant<double, std::vector<double>> g_sat = 0.0;
  double g_c = 0.0;

  /// g_s = g_c = g, the convention used by the phase diagrams and metrology.
  static DriveParams uniform(double lambda, double g) { return {lambda, g, g}; }

  bool satellites_uniform() const noexcept;
  double satellite_field(int i) const;

  /// Throws std::invalid_argument if the per-spin field array does not match
  /// n_sat or if a non-uniform field is used with the symmetric backend.
  void validate(int n_sat, Backend backend) const;
};

/// Backend request as given by a user; Auto is resolved per run.
enum class BackendChoice { Auto, Full, Symmetric };

/// Auto picks Symmetric when the satellite field is uniform and n_sat exceeds
/// this, Full otherwise.
inline constexpr int kAutoSymmetricAbove = 14;

/// Throws std::invalid_argument when Symmetric is requested with a
/// non-uniform satellite field.
Backend resolve_backend(BackendChoice choice, const DriveParams& params, int n_sat);

BackendChoice parse_backend_choice(std::string_view text);
const char* backend_choice_name(BackendChoice choice) noexcept;

}  // namespace csm

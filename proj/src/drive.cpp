#include "csm/drive.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace csm {

bool DriveParams::satellites_uniform() const noexcept {
  if (const auto* fields = std::get_if<std::vector<double>>(&g_sat)) {
    return std::adjacent_find(fields->begin(), fields->end(), std::not_equal_to<>()) ==
           fields->end();
  }
  return true;
}

double DriveParams::satellite_field(int i) const {
  if (const auto* g = std::get_if<double>(&g_sat)) return *g;
  const auto& fields = std::get<std::vector<double>>(g_sat);
  if (i < 0 || static_cast<std::size_t>(i) >= fields.size()) {
    throw std::out_of_range("satellite index " + std::to_string(i) + " outside field array");
  }
  return fields[static_cast<std::size_t>(i)];
}

void DriveParams::validate(int n_sat, Backend backend) const {
  if (const auto* fields = std::get_if<std::vector<double>>(&g_sat)) {
    if (fields->size() != static_cast<std::size_t>(n_sat)) {
      throw std::invalid_argument("satellite field array has " + std::to_string(fields->size()) +
                                  " entries for n_sat = " + std::to_string(n_sat));
    }
  }
  if (backend == Backend::Symmetric && !satellites_uniform()) {
    throw std::invalid_argument("symmetric backend requires a uniform satellite field");
  }
}

Backend resolve_backend(BackendChoice choice, const DriveParams& params, int n_sat) {
  switch (choice) {
    case BackendChoice::Full:
      return Backend::Full;
    case BackendChoice::Symmetric:
      params.validate(n_sat, Backend::Symmetric);
      return Backend::Symmetric;
    case BackendChoice::Auto:
      break;
  }
  return params.satellites_uniform() && n_sat > kAutoSymmetricAbove ? Backend::Symmetric
                                                                     : Backend::Full;
}

BackendChoice parse_backend_choice(std::string_view text) {
  if (text == "auto") return BackendChoice::Auto;
  if (text == "full") return BackendChoice::Full;
  if (text == "symmetric") return BackendChoice::Symmetric;
  throw std::invalid_argument("unknown backend '" + std::string(text) +
                              "' (expected auto, full or symmetric)");
}

const char* backend_choice_name(BackendChoice choice) noexcept {
  switch (choice) {
    case BackendChoice::Full:
      return "full";
    case BackendChoice::Symmetric:
      return "symmetric";
    case BackendChoice::Auto:
      break;
  }
  return "auto";
}

}  // namespace csm

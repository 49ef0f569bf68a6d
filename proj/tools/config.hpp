#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csm/protocol.hpp"

namespace csm::cli {

/// Radians, or a multiple of pi: "pi", "-pi", "2pi", "2*pi", "pi/2", "3pi/2", "0.25pi".
double parse_angle(std::string_view text);

/// "a..b:count" (inclusive, evenly spaced), "a..b" (count = default_count) or a
/// single angle (count 1).
GridAxis parse_angle_range(std::string_view text, int default_count = 101);

/// "a..b" (step 1), "a..b:step", "a,b,c" or a single integer.
std::vector<int> parse_int_list(std::string_view text);

/// Comma-separated angles.
std::vector<double> parse_angle_list(std::string_view text);

/// Reads key=value lines (# comments) into command-line tokens "--key=value".
/// A `command` key is returned separately in `command`.
struct ConfigFileArgs {
  std::string command;
  std::vector<std::string> tokens;
};
ConfigFileArgs read_config_file(const std::string& path);

}  // namespace csm::cli

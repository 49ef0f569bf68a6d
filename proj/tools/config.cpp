#include "config.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace csm::cli {

namespace {

std::string clean(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  return out;
}

double parse_number(std::string_view text, std::string_view whole) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw std::invalid_argument("cannot parse '" + std::string(whole) + "' as a number");
  }
  return value;
}

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("cannot parse '" + std::string(whole) + "' as an integer");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

}  // namespace

double parse_angle(std::string_view text) {
  const std::string s = clean(text);
  const std::size_t pi = s.find("pi");
  if (pi == std::string::npos) return parse_number(s, text);

  std::string_view coef(s.data(), pi);
  if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
  double factor = 1.0;
  if (coef == "-") {
    factor = -1.0;
  } else if (!coef.empty() && coef != "+") {
    factor = parse_number(coef, text);
  }
  std::string_view rest(s.data() + pi + 2, s.size() - pi - 2);
  if (!rest.empty()) {
    if (rest.front() != '/') {
      throw std::invalid_argument("cannot parse '" + std::string(text) + "' as an angle");
    }
    const double den = parse_number(rest.substr(1), text);
    if (den == 0.0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    factor /= den;
  }
  return factor * kPi;
}

GridAxis parse_angle_range(std::string_view text, int default_count) {
  const std::string s = clean(text);
  const std::size_t dots = s.find("..");
  if (dots == std::string::npos) {
    const double v = parse_angle(s);
    return {v, v, 1};
  }
  std::string_view rest(s.data() + dots + 2, s.size() - dots - 2);
  int count = default_count;
  if (const std::size_t colon = rest.find(':'); colon != std::string_view::npos) {
    count = parse_int(rest.substr(colon + 1), text);
    rest = rest.substr(0, colon);
  }
  if (count < 1) throw std::invalid_argument("range '" + std::string(text) + "' has no points");
  GridAxis axis{parse_angle(std::string_view(s.data(), dots)), parse_angle(rest), count};
  if (count == 1 && axis.start != axis.stop) {
    throw std::invalid_argument("range '" + std::string(text) + "' needs at least 2 points");
  }
  return axis;
}

std::vector<int> parse_int_list(std::string_view text) {
  const std::string s = clean(text);
  std::vector<int> out;
  if (s.find(',') != std::string::npos) {
    for (std::string_view part : split(s, ',')) out.push_back(parse_int(part, text));
    return out;
  }
  const std::size_t dots = s.find("..");
  if (dots == std::string::npos) return {parse_int(s, text)};
  std::string_view rest(s.data() + dots + 2, s.size() - dots - 2);
  int step = 1;
  if (const std::size_t colon = rest.find(':'); colon != std::string_view::npos) {
    step = parse_int(rest.substr(colon + 1), text);
    rest = rest.substr(0, colon);
  }
  const int first = parse_int(std::string_view(s.data(), dots), text);
  const int last = parse_int(rest, text);
  if (step < 1) throw std::invalid_argument("range step must be positive in '" + s + "'");
  if (last < first) throw std::invalid_argument("empty range '" + s + "'");
  for (int v = first; v <= last; v += step) out.push_back(v);
  return out;
}

std::vector<double> parse_angle_list(std::string_view text) {
  std::vector<double> out;
  for (std::string_view part : split(text, ',')) out.push_back(parse_angle(part));
  return out;
}

ConfigFileArgs read_config_file(const std::string& path) {
  ConfigFileArgs out;
  CLI::ConfigBase parser;
  parser.comment('#')->arrayBounds('\0', '\0')->arrayDelimiter(',');
  for (const CLI::ConfigItem& item : parser.from_file(path)) {
    if (item.inputs.empty()) continue;
    std::string value = item.inputs.front();
    for (std::size_t i = 1; i < item.inputs.size(); ++i) value += "," + item.inputs[i];
    std::string key = item.name;
    std::replace(key.begin(), key.end(), '_', '-');
    if (key == "command") {
      out.command = value;
    } else {
      out.tokens.push_back("--" + key + "=" + value);
    }
  }
  return out;
}

}  // namespace csm::cli

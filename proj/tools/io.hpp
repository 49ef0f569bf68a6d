#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace csm::cli {

/// Shortest text that round-trips: %.17g, with nan and inf spelled out.
std::string format_double(double value);

/// RFC 4180 quoting: fields holding a comma, quote or line break are quoted
/// and inner quotes doubled.
std::string csv_field(std::string_view text);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  void add_row(std::vector<std::string> fields);
  std::string str() const;

 private:
  std::size_t width_;
  std::string body_;
};

/// Writes to a temporary file next to `path`, then renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace csm::cli

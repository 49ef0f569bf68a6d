#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace csm::cli {

/// Runs one command line (without the program name). The one-line summary
/// and help go to `out`; error records (one JSON object per line) go to `err`.
/// Returns the process exit status: 0 success, 1 runtime failure or failed
/// check, 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace csm::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphalg::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kInternalError = 3 };

/// Runs one command line (without the program name). Results go to `out` as
/// JSON or DOT; errors go to `err` as {"error", "message"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphalg::cli

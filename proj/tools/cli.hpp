#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cgsb::cli {

enum ExitCode { kOk = 0, kFail = 1, kInconclusive = 2, kInputError = 3 };

/// Runs one command line; human-readable output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgsb::cli

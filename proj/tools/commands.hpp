#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratsurf::cli {

// Runs the batch CLI on the given argument list (without argv[0]).
// JSON results go to `out`, diagnostics to `err`.  Exit codes:
//   0  value computed / all checks passed
//   1  a checked condition failed
//   2  malformed or unsupported input, or an undetermined value
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratsurf::cli

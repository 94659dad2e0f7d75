#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lsc::cli {

/// Runs the `lsc` command line. `args` excludes the program name.
/// Returns the process exit code: 0 on success, 2 for usage errors, 1 otherwise.
/// Failures are reported on `err` as a single JSON line.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lsc::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qring::cli {

// Parses and runs one workbench invocation (arguments without the program
// name). All output goes to the given streams so callers can capture it;
// returns the process exit status, 0 on success. Failures print a
// human-readable line to `err`, or a machine-readable error object to `out`
// when --json is active.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace qring::cli

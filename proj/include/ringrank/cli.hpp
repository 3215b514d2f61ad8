#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringrank {

/// Runs the command line (args excludes the program name) and returns the
/// process exit code: 0 ok, 1 failed demo checks, 2 invalid input, 3
/// computation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ringrank

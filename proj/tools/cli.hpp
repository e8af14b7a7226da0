#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eulerpiv {

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`. Returns 0, or 1 for input errors, 2 for
/// failed preconditions and 3 for internal errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerpiv

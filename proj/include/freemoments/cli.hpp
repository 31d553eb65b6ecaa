#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace freemoments {

/// Runs the command-line front end on `args` (args[0] is the program name).
/// Returns the process exit code: 0 on success, 1 when `verify` reports a
/// failing check, 2 on usage, parse or parameter errors.
int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace freemoments

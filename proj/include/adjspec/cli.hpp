#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adjspec {

/**
 * Runs the command-line front end. `args` excludes the program name.
 * Returns the process exit code: 0 ok, 2 parse/usage error, 3 unresolvable
 * spectrum, 4 inconsistent spectrum, 5 verification failure, 1 other errors.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adjspec

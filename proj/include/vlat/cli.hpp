#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vlat {

/// The command-line front end. `args` excludes the program name.
/// Returns 0 on success, 1 on a property failure, 2 on usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vlat

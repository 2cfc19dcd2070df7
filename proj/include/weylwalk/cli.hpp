#pragma once

#include <string>
#include <vector>

namespace weylwalk {

/// Entry point of the command-line tool.  `args` excludes the program name.
/// Exit codes: 0 success, 1 verification failure, 2 unreachable target under
/// --strict, 64 usage error, 65 malformed input file.
int run_cli(std::vector<std::string> args);

}  // namespace weylwalk

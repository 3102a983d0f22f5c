#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fbg {

/// Entry point behind main(): parses the argument list (without argv[0]),
/// dispatches to the subcommand and writes to the given streams. Exit codes:
/// 0 success, 1 verification failure, 2 parse error, 3 guard or usage
/// violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fbg

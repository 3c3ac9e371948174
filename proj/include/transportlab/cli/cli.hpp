#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace transportlab::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;   // infeasible instance or false predicate
inline constexpr int kGuard = 2;   // a size guard refused the work
inline constexpr int kInput = 3;   // malformed input or usage

/// Runs one command line. `args` excludes the program name. Instances are
/// read from the file named by the positional argument, or from `in` when
/// it is absent or "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace transportlab::cli

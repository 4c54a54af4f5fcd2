#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cleangraph::cli {

inline constexpr int kExitOk = 0;      // found, or the determination completed
inline constexpr int kExitNone = 1;    // completed with a negative result
inline constexpr int kExitError = 2;   // usage, I/O, parse, or precondition error
inline constexpr int kExitBudget = 3;  // search budget exhausted before an answer

// Parses and runs one invocation; argv[0] is not included in args.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cleangraph::cli

// Command-line front end.  `run_cli` is the whole program minus argv
// plumbing so tests can drive it with string vectors and capture output.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsei {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse_error = 2;
inline constexpr int precondition = 3;
inline constexpr int check_failed = 4;
}  // namespace exit_code

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsei

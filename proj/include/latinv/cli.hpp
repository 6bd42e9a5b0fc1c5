// Command-line front end.  Exit codes: 0 success, 1 input or usage error,
// 2 numerical failure.

#ifndef LATINV_CLI_HPP_
#define LATINV_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace latinv {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitNumerical = 2;

// args excludes the program name.  A missing input path or "-" reads `in`.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace latinv

#endif  // LATINV_CLI_HPP_

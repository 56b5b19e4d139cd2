#pragma once

// Command-line surface. Exit codes: 0 success or all checks pass, 1 a
// property or check failed, 2 invalid input (usage text on stderr).

#include <iosfwd>
#include <string>
#include <vector>

namespace ringlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalid = 2;

/// args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace ringlab

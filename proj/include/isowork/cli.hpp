#ifndef ISOWORK_CLI_HPP
#define ISOWORK_CLI_HPP

#include <ostream>

namespace isowork {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitInputError = 2,
  kExitCrossCheck = 3,
};

inline constexpr int kJsonSchemaVersion = 1;

/// Runs one invocation: classify, work, plane, table1 or verify.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isowork

#endif  // ISOWORK_CLI_HPP

#ifndef BICRIT_CLI_HPP
#define BICRIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace bicrit::cli {

enum ExitCode : int {
  ok = 0,
  failure = 1,  ///< verification failed or unexpected internal error
  usage = 2,
  no_certificate = 3,
  bad_input = 4,
};

/// Runs the command line `args` (without the program name). Reports go
/// to `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bicrit::cli

#endif  // BICRIT_CLI_HPP

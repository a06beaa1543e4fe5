#ifndef CYCLO_CLI_HPP
#define CYCLO_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cyclo {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

/// Runs one subcommand. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclo

#endif

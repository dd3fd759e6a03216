#ifndef RACG_CLI_HPP_
#define RACG_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace racg::cli {

  // Process exit codes.
  enum ExitCode : int {
    success             = 0,
    invalid_input       = 1,
    verification_failed = 2,
    resource_cap        = 3,
  };

  // Runs one subcommand. `args` excludes the program name. Results go to
  // `out` (or --out FILE), diagnostics to `err`.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace racg::cli

#endif  // RACG_CLI_HPP_

#ifndef FORMATIONLAB_CLI_HPP_
#define FORMATIONLAB_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace formationlab {

  // Exit codes of the command-line tool.
  enum ExitCode : int {
    kExitOk       = 0,
    kExitMismatch = 1,
    kExitInput    = 2,
    kExitResource = 3,
  };

  // Runs the tool on args (without the program name).
  int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace formationlab

#endif  // FORMATIONLAB_CLI_HPP_

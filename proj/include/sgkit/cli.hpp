#ifndef SGKIT_CLI_HPP_
#define SGKIT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace sgkit {

  // Exit codes of the command-line tool.
  inline constexpr int kExitOk           = 0;
  inline constexpr int kExitError        = 2;  // usage, input, precondition, cap
  inline constexpr int kExitInseparable  = 3;
  inline constexpr int kExitVerification = 4;

  // Runs `sgkit <args...>`; args excludes the program name.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace sgkit

#endif  // SGKIT_CLI_HPP_

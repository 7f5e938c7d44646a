#ifndef MONALG_APP_HPP
#define MONALG_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace monalg {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1, // round-trip failure, not isomorphic
    kExitUsage = 2,    // bad arguments, parse or validation errors
};

/// Runs the monalg command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace monalg

#endif // MONALG_APP_HPP

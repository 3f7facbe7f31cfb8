#ifndef GQD_TOOLS_CLI_APP_HPP
#define GQD_TOOLS_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gqd::cli {

/// Process exit codes.
enum ExitCode : int
{
    exit_ok = 0,
    exit_domain = 1,
    exit_usage = 2,
};

/// Runs one command line (without the program name). Data goes to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace gqd::cli

#endif

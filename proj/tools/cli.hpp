#ifndef ONESKEL_TOOLS_CLI_HPP
#define ONESKEL_TOOLS_CLI_HPP

#include <ostream>

namespace oneskel::cli {

enum ExitCode : int
{
    ok = 0,
    domain_failure = 1,
    input_failure = 2
};

/// Runs the command line tool; all output goes to the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace oneskel::cli

#endif

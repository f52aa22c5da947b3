#ifndef VCSP_TOOLS_CLI_HPP
#define VCSP_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace vcsp::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
    kOk = 0,
    kFailed = 1,    // a check did not hold / a certificate did not replay
    kNpHard = 2,
    kUnknown = 3,
    kBadInput = 64, // malformed file or arguments
    kCapability = 65,
};

/// Runs one command line (without the program name). Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vcsp::cli

#endif // VCSP_TOOLS_CLI_HPP

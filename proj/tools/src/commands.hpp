#ifndef RULEKIT_TOOLS_COMMANDS_HPP
#define RULEKIT_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rulekit::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,    // I/O trouble writing outputs
    kBadInput = 2,   // malformed artifact, CSV, parameters or filter
    kPortBusy = 3,
};

// args[0] is the program name. Diagnostics go to err as one line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rulekit::cli

#endif

#ifndef GASCHED_TOOLS_CLI_HPP_
#define GASCHED_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace gasched::cli {

enum ExitCode : int {
   kOk = 0,
   kUsage = 1,
   kInvalid = 2,
   kIo = 3,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gasched::cli

#endif  // GASCHED_TOOLS_CLI_HPP_

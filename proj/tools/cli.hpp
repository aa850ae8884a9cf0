#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fiberres::cli {

enum ExitCode : int {
    kOk = 0,
    kHypothesis = 1,
    kUsage = 2,
    kVerification = 3,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fiberres::cli

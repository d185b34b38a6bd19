#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fct::cli {

enum ExitCode : int {
    kSuccess = 0,
    kNegative = 1,  // the run completed and the answer is "no"
    kUsage = 2,
    kIoError = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fct::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace indpoly::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kOk = 0,
    kFalseVerdict = 1,
    kUsageError = 2,
    kBoundExceeded = 3,
};

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace indpoly::cli

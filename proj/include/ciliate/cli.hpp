#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ciliate::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kAffirmative = 0,
    kNegative = 1,
    kInputError = 2,
    kCapacityError = 3,
};

struct Result {
    int exit_code = kAffirmative;
    std::string out;
    std::string err;
};

/// Runs one invocation. `args` excludes the program name; `in` feeds --stdin.
Result run(const std::vector<std::string>& args, std::istream& in);

}  // namespace ciliate::cli

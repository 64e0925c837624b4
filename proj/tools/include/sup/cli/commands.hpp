#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sup::cli {

enum ExitCode : int {
    Ok = 0,
    InputError = 1,   // parse, mode, definition or type error
    LimitError = 2,   // step limit or graph budget exceeded
    UsageError = 3,
};

/// Runs the `sup` command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 17 significant digits; integral values keep a trailing ".0".
std::string formatProbability(double p);

}  // namespace sup::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace origami::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2 };

/// Runs one command line (args exclude the program name). Errors are
/// reported on `err` as a single line "error: <code>: <message>".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace origami::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphtda::cli {

enum ExitCode : int { ok = 0, usage_error = 1, input_error = 2, internal_error = 3 };

/// Runs the command line (args excludes the program name). Results go to
/// out unless --output is given; diagnostics go to err.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace graphtda::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seaweed::cli {

enum ExitCode : int { ok = 0, disagreement = 1, usage = 2 };

/// Runs the command line `args` (program name excluded) and returns the exit
/// code. All output goes to the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seaweed::cli

#pragma once

#include <string>
#include <vector>

namespace rcav::cli {

/// Runs one CLI invocation (args exclude the program name). Returns the
/// process exit status; errors are reported on stderr.
int run(std::vector<std::string> args);

}  // namespace rcav::cli

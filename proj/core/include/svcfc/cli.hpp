#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace svcfc {

// Runs one CLI invocation; args exclude the program name. Each subcommand
// prints a single JSON document to `out`. Exit codes: 0 computed, 1 decide
// answered "no", 2 input or validity error, 3 budget exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace svcfc

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latlevel {

/// Command-line entry point, separated from main() so tests can drive the
/// full surface in-process. Exit codes: 0 success, 1 validation/computation
/// failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latlevel

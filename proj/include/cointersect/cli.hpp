#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace coint {

inline constexpr std::string_view kVersion = "0.1.0";

/// Runs one command line (args excludes the program name). Returns 0 on
/// success, 1 on a domain error or failed check, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coint

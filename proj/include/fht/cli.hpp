#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fht::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one subcommand. The report goes to --out or to `out`; the one-line
/// summary and any diagnostics go to `err`. Returns 0 on pass, 1 on fail,
/// 2 on a usage or configuration error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace fht::cli

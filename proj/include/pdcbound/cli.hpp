#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pdcbound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCheckFailed = 2;

std::string version_string();

/// Parses and runs one invocation. args excludes the program name.
/// Data goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pdcbound::cli

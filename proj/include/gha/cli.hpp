#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gha {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitResourceCap = 3;

/// `args` excludes the program name. Data goes to `out` (or --out files),
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gha

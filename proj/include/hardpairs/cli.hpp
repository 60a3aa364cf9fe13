#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hardpairs::cli {

inline constexpr std::uint64_t kDefaultSeed = 0;

enum ExitStatus : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

/// Runs the command line (without the program name). Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hardpairs::cli

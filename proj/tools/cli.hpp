#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symf::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;   ///< valid syntax, invalid request
inline constexpr int kUsageError = 2;    ///< malformed arguments
inline constexpr int kInternalError = 3; ///< an internal invariant failed

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symf::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gbcore::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kUsageOrDataError = 2;
inline constexpr int kInternalError = 3;

/// Runs the gbtool command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gbcore::cli

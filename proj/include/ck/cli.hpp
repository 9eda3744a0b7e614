#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

namespace ck::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kDomain = 3, kConvergence = 4 };

/// "x" → {x}; "a:b:k" → k linearly spaced values; "a:b:kg" → k geometric
/// values. Throws DomainError on malformed input.
std::vector<double> parse_grid(std::string_view spec);

/// Entry point of the `ck` tool, with the streams injectable for tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ck::cli

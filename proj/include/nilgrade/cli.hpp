#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilgrade::cli {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

/// Runs the command line `args` (without the program name). Returns 0 on success,
/// 1 when verification fails or a search finds nothing, 2 on input or usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nilgrade::cli

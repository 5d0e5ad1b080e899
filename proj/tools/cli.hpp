#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planepaths::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kInternalError = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planepaths::cli

#pragma once

#include <iosfwd>

namespace affweyl::cli {

// Exit codes: 0 success, 2 usage/parse error, 3 internal invariant or
// --verify mismatch.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace affweyl::cli

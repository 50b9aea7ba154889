#pragma once

#include <iosfwd>

namespace cliffrank::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

// Dispatches the tables / verify / subalgebras / check subcommands.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cliffrank::cli

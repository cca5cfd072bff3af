#pragma once

#include <iosfwd>

namespace qc::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kMalformedInput = 1;
inline constexpr int kPropertyViolation = 2;
inline constexpr int kIndeterminate = 3;
inline constexpr int kBoundsExceeded = 4;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qc::cli

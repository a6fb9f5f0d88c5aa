#pragma once

#include <iosfwd>

namespace congruence_lab {

/// Exit codes: 0 all match, 1 usage or precondition error, 2 congruence mismatch.
inline constexpr int kExitMatch = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

/// Entry point behind the congruence_lab binary; streams are injectable for tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace congruence_lab

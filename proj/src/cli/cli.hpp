#pragma once

#include <iosfwd>

namespace rcthyper::cli {

/// Exit codes: 0 all contracts met, 1 a contract violated or nothing
/// found, 2 usage or domain error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rcthyper::cli

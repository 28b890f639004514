#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftfact::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;  // failed check, residual over threshold, pole
inline constexpr int kExitUsage = 2;      // bad flags, unparseable literal, malformed JSON

/// Runs one command line (without the program name). Results go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shiftfact::cli

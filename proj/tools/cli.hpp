#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reldim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNonConvergence = 3;
inline constexpr int kExitInternal = 1;

/// Runs one command line (without the program name). Results go to `out`, or
/// to the --out file; diagnostics and warnings go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reldim::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace algvec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs the `algvec` command line. `args` excludes the program name.
/// Results go to `out` (or --output), diagnostics and errors to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace algvec::cli

#ifndef QCMA_TOOLS_CLI_H
#define QCMA_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace qcma::cli {

/// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFail = 2;

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qcma::cli

#endif

#pragma once

namespace residua {

// Parses argv and runs one subcommand (enumerate, verify, scan, dynkin,
// plancherel, diff-oracle). Returns the process exit code: 0 success,
// 1 usage or config error, 2 resource cap hit, 3 verification failure.
int run_cli(int argc, const char* const* argv);

}  // namespace residua

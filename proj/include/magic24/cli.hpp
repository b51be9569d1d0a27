#pragma once

namespace magic24 {

/// Parses argv and runs one subcommand. Returns the process exit code:
/// 0 success (and, for verify, a magic labeling), 1 verification or runtime
/// failure, 2 usage or parse error.
int run_cli(int argc, char** argv);

}  // namespace magic24

#pragma once

namespace bbw {

// full command-line front end; returns the process exit code
// (0 ok, 1 counterexample, 2 indeterminate, 64 usage error)
int run_cli(int argc, const char* const* argv);

}  // namespace bbw

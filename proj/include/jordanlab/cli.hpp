#pragma once

namespace jordanlab {

// Command dispatch for the jordanlab tool; returns the process exit code.
// 0 success, 1 verified property failed, 2 parse error, 3 resource cap.
int run_cli(int argc, const char* const* argv);

}  // namespace jordanlab

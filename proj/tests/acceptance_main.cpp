#include <cstring>
#include <iostream>
#include <string>

#include "jordanlab/acceptance.hpp"

// Runs every acceptance criterion and prints one pass/fail line per
// criterion; exit code 0 iff all gating criteria pass.
int main(int argc, char** argv) {
  jordanlab::AcceptanceOptions opts;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--cache-dir" && i + 1 < argc) {
      opts.comp.cache_dir = argv[++i];
    } else if (arg == "--seed" && i + 1 < argc) {
      opts.seed = std::stoull(argv[++i]);
    } else if (arg == "--deep") {
      opts.deep = true;
      opts.comp.max_cols = 60000;
      opts.comp.max_rows = 2000000;
    } else {
      std::cerr << "usage: acceptance_tests [--cache-dir DIR] [--seed N] "
                   "[--deep]\n";
      return 2;
    }
  }
  jordanlab::AcceptanceReport report =
      jordanlab::run_acceptance(opts, &std::cout);
  std::cout << (report.all_pass() ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL")
            << "\n";
  return report.all_pass() ? 0 : 1;
}

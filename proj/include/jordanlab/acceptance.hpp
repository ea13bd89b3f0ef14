#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "jordanlab/albert.hpp"
#include "jordanlab/component.hpp"

namespace jordanlab {

struct AcceptanceOptions {
  ComponentOptions comp;
  uint64_t seed = kDefaultSeed;
  bool deep = false;  // degree-9 T-ideal comparison, reported but not gated
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool gating = true;  // deep report lines never gate the exit code
  std::string details;
  double elapsed_ms = 0;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  bool all_pass() const {
    for (const auto& c : criteria)
      if (c.gating && !c.pass) return false;
    return true;
  }
};

// Runs every acceptance criterion, printing one pass/fail line per criterion
// to `progress` as it completes (when non-null).
AcceptanceReport run_acceptance(const AcceptanceOptions& opts,
                                std::ostream* progress);

}  // namespace jordanlab

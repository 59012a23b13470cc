// The acceptance battery: every identity and oracle check the build must
// pass, runnable at two sizes. The CLI `suite` command and the acceptance
// test binary both drive this.
#pragma once

#include <cstdint>
#include <vector>

#include "conelab/report.hpp"

namespace conelab::acceptance {

enum class Level { Quick, Full };

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;          // one-line human summary
  double runtime_s = 0.0;      // excluded from serialized reports
  std::vector<VerificationReport> reports;
};

std::vector<CriterionResult> run_suite(Level level, std::uint64_t seed);

// Deterministic serialization (no runtimes).
nlohmann::ordered_json suite_json(const std::vector<CriterionResult>& results,
                                  Level level, std::uint64_t seed);

}  // namespace conelab::acceptance

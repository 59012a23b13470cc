// Machine-readable outcome of an exact or numeric identity check.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace conelab {

struct VerificationReport {
  std::string identity;              // recurrence | difference | euler | ...
  nlohmann::ordered_json params;     // full parameter echo
  std::string status;                // exact-zero | within-tolerance | failed
  nlohmann::ordered_json residual;   // exact terms, or a float summary
  std::string tolerance;             // "exact" or e.g. "1e-06 relative"
  std::optional<std::uint64_t> seed;
  std::int64_t runtime_ms = 0;

  bool passed() const { return status != "failed"; }

  // with_runtime defaults off so reports are byte-reproducible
  nlohmann::ordered_json to_json(bool with_runtime = false) const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    j["params"] = params;
    j["status"] = status;
    j["residual"] = residual;
    j["tolerance"] = tolerance;
    if (seed) j["seed"] = *seed;
    if (with_runtime) j["runtime_ms"] = runtime_ms;
    return j;
  }
};

}  // namespace conelab

// Small JSON helpers shared by reports and the CLI.
#pragma once

#include <json.hpp>

#include "conelab/sympoly.hpp"

namespace conelab {

inline nlohmann::ordered_json sympoly_terms_json(const SymPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [k, c] : p.coeffs()) {
    nlohmann::ordered_json t;
    t["partition"] = k.to_string();
    t["coeff"] = format_rational(c);
    terms.push_back(t);
  }
  return terms;
}

}  // namespace conelab

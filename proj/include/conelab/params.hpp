// Domain parameters (r, a) of the type-A family of symmetric cones, with the
// derived dimension d = r + a r(r-1)/2 and genus p = 2d/r, plus the half sum
// of positive roots rho_j = (a/4)(r+1-2j).
#pragma once

#include <vector>

#include "conelab/rational.hpp"

namespace conelab {

struct DomainParams {
  int r = 1;
  Rational a = 1;
  Rational d = 1;  // complex dimension of V
  Rational p = 2;  // genus, 2d/r
};

DomainParams make_params(int r, const Rational& a);

struct Rho {
  std::vector<Rational> components;  // length r, summing to zero
};

Rho rho(const DomainParams& params);

std::string params_to_json(const DomainParams& params);

}  // namespace conelab

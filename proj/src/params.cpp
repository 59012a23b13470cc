#include "conelab/params.hpp"

namespace conelab {

DomainParams make_params(int r, const Rational& a) {
  if (r < 1) throw Error("invalid-argument", "rank must be >= 1");
  if (a <= 0) throw Error("invalid-argument", "multiplicity a must be > 0");
  DomainParams p;
  p.r = r;
  p.a = a;
  p.d = Rational(r) + a * r * (r - 1) / 2;
  p.p = 2 * p.d / r;
  return p;
}

Rho rho(const DomainParams& params) {
  Rho out;
  out.components.reserve(params.r);
  for (int j = 1; j <= params.r; ++j)
    out.components.push_back(params.a / 4 * (params.r + 1 - 2 * j));
  return out;
}

std::string params_to_json(const DomainParams& params) {
  return std::string("{\"r\": ") + std::to_string(params.r) +
         ", \"a\": \"" + format_rational(params.a) +
         "\", \"d\": \"" + format_rational(params.d) +
         "\", \"p\": \"" + format_rational(params.p) + "\"}";
}

}  // namespace conelab

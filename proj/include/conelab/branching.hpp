// The orthogonal polynomials p_{nu,m}(lambda): values on the shifted lattice
// through the Cayley-factor expansion
//   Delta(e-x)^{-nu} psi_m((e+x)/(e-x)) = sum_n p_{nu,n}(lambda_m) psi_n(x),
// lambda_m = -i(m + nu/2 - rho), extension to W-invariant polynomials in
// s = i lambda by exact interpolation, the rank-1 Meixner-Pollaczek closed
// form, and exact verification of the recurrence and difference equations.
#pragma once

#include <map>

#include "conelab/coeffs.hpp"
#include "conelab/jack.hpp"
#include "conelab/params.hpp"
#include "conelab/report.hpp"
#include "conelab/serialize.hpp"

namespace conelab {

// W-invariant polynomial in the rotated spectral variable s = i lambda,
// stored in the monomial-symmetric basis of s.
using SpectralPoly = SymPoly;

struct BranchingContext {
  DomainParams params;
  Rational nu;
  int degree_cap = 0;
};

BranchingContext make_branching_context(const DomainParams& params,
                                        const Rational& nu, int degree_cap);

// s-coordinates of the lattice node attached to m: s = m + nu/2 - rho.
std::vector<Rational> node_spectral(const Partition& m,
                                    const BranchingContext& ctx);

// Exact coefficients { n -> p_{nu,n}(lambda_m) } for all |n| <= ctx.degree_cap.
std::map<Partition, Rational> branching_at_node(const Partition& source,
                                                const BranchingContext& ctx,
                                                JackTable& jack);

// Coefficient of x^n in (1-x)^{-nu/2 - i lambda} (1+x)^{-nu/2 + i lambda}
// as a polynomial in s = i lambda (rank 1).
SpectralPoly mp_poly(int n, const Rational& nu);

// Shared node table for one (params, nu): holds branching_at_node values for
// all sources of weight <= max_weight + 1 and interpolated polynomials for
// all |n| <= max_weight, each checked against the held-out nodes of weight
// |n| + 1 before use.
class BranchingTable {
 public:
  BranchingTable(const BranchingContext& ctx, JackTable& jack, int max_weight);

  const BranchingContext& ctx() const { return ctx_; }
  int max_weight() const { return max_weight_; }

  Rational value_at_node(const Partition& n, const Partition& source) const;
  const SpectralPoly& poly(const Partition& n);

  // Theorem-level exact checks; the returned report carries the residual.
  VerificationReport verify_recurrence(const Partition& n,
                                       bool mutate_sign = false);
  VerificationReport verify_difference(const Partition& n);

 private:
  BranchingContext ctx_;
  JackTable& jack_;
  int max_weight_;
  std::map<Partition, std::map<Partition, Rational>> node_values_;  // [source][n]
  std::map<Partition, SpectralPoly> polys_;

  SpectralPoly interpolate(const Partition& n) const;
};

}  // namespace conelab

// Spherical polynomials psi_m: Jack symmetric polynomials with parameter
// alpha = 2/a, normalized so psi_m(1,...,1) = 1. Built as the simultaneous
// eigenfunctions of the degree-preserving operator
//   D = (alpha/2) sum_i x_i^2 d_i^2 + sum_{i<j} (x_i^2 d_i - x_j^2 d_j)/(x_i - x_j),
// whose action on the monomial basis is triangular in dominance order.
#pragma once

#include <map>
#include <mutex>

#include "conelab/params.hpp"
#include "conelab/sympoly.hpp"

namespace conelab {

class JackTable {
 public:
  explicit JackTable(const DomainParams& params, int weight_budget = 64);

  const DomainParams& params() const { return params_; }

  // psi_m, exact; throws "resource-limit" beyond the weight budget.
  SymPoly psi(const Partition& m);

  // Expansion coefficients c_n with p = sum_n c_n psi_n (up to the cap for
  // truncated series). Zero coefficients are absent.
  std::map<Partition, Rational> to_jack_basis(const SymPoly& p);

  // Leading coefficient of m_m in psi_m.
  Rational lead_coeff(const Partition& m);

 private:
  DomainParams params_;
  Rational alpha_;
  int weight_budget_;
  std::mutex mutex_;
  std::map<Partition, SymPoly> psi_;
  std::map<Partition, SymPoly> dcol_;       // D m_mu
  std::map<Partition, Rational> eigen_;     // diagonal of D

  const SymPoly& dcolumn(const Partition& mu);
  const SymPoly& psi_unlocked(const Partition& m);
  std::map<Partition, Rational> to_jack_basis_unlocked(const SymPoly& p);
};

// One Cayley-pullback factor: Delta(e-x)^{-nu} * psi_m((e+x)/(e-x)).
// With m = 0 this is the plain power factor prod_i (1-x_i)^{-nu}.
struct CayleyFactorSpec {
  Partition m;
  Rational nu;
};

// Exact truncated symmetric series of the factor to total degree cap.
SymPoly expand_cayley_factor(const CayleyFactorSpec& spec, JackTable& jack,
                             int cap);

// Coefficients of (1+x)^b (1-x)^{-b-nu} up to degree cap (b >= 0).
std::vector<Rational> cayley_univariate_series(int b, const Rational& nu,
                                               int cap);

}  // namespace conelab

// Step coefficients of the recurrence and difference formulas:
//   binom(n, n-gamma_k) = (n_k + (a/2)(r-k))
//       * prod_{j != k} (n_k - n_j + (a/2)(j-k-1)) / (n_k - n_j + (a/2)(j-k))
//   c_n(k) = prod_{j != k} (n_j - n_k - (a/2)(j+1-k)) / (n_j - n_k - (a/2)(j-k))
// plus the generalized binomial coefficients binom(m, n) defined through the
// shifted expansion psi_m(e + x) = sum_n binom(m, n) psi_n(x).
#pragma once

#include <complex>
#include <mutex>

#include "conelab/jack.hpp"
#include "conelab/multipoly.hpp"
#include "conelab/params.hpp"

namespace conelab {

struct StepCoeff {
  Rational value = 0;
  bool defined_at = true;  // false exactly when a denominator factor vanishes
};

struct StepCoeffComplex {
  std::complex<double> value = 0.0;
  bool defined_at = true;
};

StepCoeff binom_step(const std::vector<Rational>& n, int k,
                     const DomainParams& params);
StepCoeff c_coeff(const std::vector<Rational>& n, int k,
                  const DomainParams& params);

StepCoeffComplex binom_step(const std::vector<std::complex<double>>& n, int k,
                            const DomainParams& params);
StepCoeffComplex c_coeff(const std::vector<std::complex<double>>& n, int k,
                         const DomainParams& params);

inline StepCoeff binom_step(const Partition& n, int k,
                            const DomainParams& params) {
  auto v = n.padded(params.r);
  return binom_step(std::vector<Rational>(v.begin(), v.end()), k, params);
}
inline StepCoeff c_coeff(const Partition& n, int k, const DomainParams& params) {
  auto v = n.padded(params.r);
  return c_coeff(std::vector<Rational>(v.begin(), v.end()), k, params);
}

// Symbolic evaluation at a vector of affine arguments n_j = args[j], each a
// multivariate polynomial. Returned as numerator / denominator factor lists
// so callers can clear denominators exactly.
struct SymbolicFraction {
  std::vector<MultiPoly> num_factors;
  std::vector<MultiPoly> den_factors;
};

SymbolicFraction binom_step_symbolic(const std::vector<MultiPoly>& args, int k,
                                     const DomainParams& params);
SymbolicFraction c_coeff_symbolic(const std::vector<MultiPoly>& args, int k,
                                  const DomainParams& params);

// Generalized binomial coefficient binom(m, n); exact, memoized per table.
class BinomTable {
 public:
  explicit BinomTable(JackTable& jack) : jack_(jack) {}

  JackTable& jack() { return jack_; }
  Rational gen_binom(const Partition& m, const Partition& n);

 private:
  JackTable& jack_;
  std::mutex mutex_;
  std::map<Partition, std::map<Partition, Rational>> rows_;

  const std::map<Partition, Rational>& row(const Partition& m);
};

}  // namespace conelab

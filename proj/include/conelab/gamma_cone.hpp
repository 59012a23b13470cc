// Gamma calculus on the cone: the Gindikin-Koecher Gamma function
//   Gamma_Omega(lambda) = (2 pi)^{(d-r)/2} prod_j Gamma(lambda_j - (j-1) a/2),
// the generalized Pochhammer symbol (lambda)_m, the Beta function of the
// cone, and the Harish-Chandra c-function density.
#pragma once

#include <complex>
#include <vector>

#include "conelab/params.hpp"
#include "conelab/partition.hpp"

namespace conelab {

// lambda in beta-coordinates; `rotated` marks the s = i lambda convention.
struct SpectralVector {
  std::vector<std::complex<double>> values;
  bool rotated = false;
};

struct GammaValue {
  double log_modulus = 0.0;
  double phase = 0.0;  // principal value in (-pi, pi]
  bool is_pole = false;
};

// log Gamma on the complex plane (Lanczos approximation); principal branch
// along the positive real axis.
std::complex<double> lgamma_complex(std::complex<double> z);

GammaValue gindikin_gamma(const SpectralVector& lambda,
                          const DomainParams& params);

// (lambda)_m = prod_j (lambda_j - (j-1) a/2)_{m_j}, exact for rational input.
Rational pochhammer(const std::vector<Rational>& lambda, const Partition& m,
                    const DomainParams& params);
// Scalar nu stands for nu * beta_0 = (nu, ..., nu).
Rational pochhammer(const Rational& nu, const Partition& m,
                    const DomainParams& params);
std::complex<double> pochhammer(const std::vector<std::complex<double>>& lambda,
                                const Partition& m, const DomainParams& params);

// B_Omega(nu, mu) = Gamma_Omega(nu) Gamma_Omega(mu) / Gamma_Omega(nu + mu),
// for Re nu, Re mu > (r-1) a/2.
double beta_cone(const Rational& nu, const Rational& mu,
                 const DomainParams& params);

// |c(lambda)|^{-2} up to the global constant |c_0|^{-2} (set to 1):
//   prod_{j<k} |Gamma(rho_j-rho_k) Gamma(a/2+rho_j-rho_k)|^2
//            / |Gamma(i(lambda_j-lambda_k)) Gamma(a/2+i(lambda_j-lambda_k))|^2.
// Returns 0 at the removable lambda_j = lambda_k limit.
double c_density(const std::vector<double>& lambda, const DomainParams& params);

}  // namespace conelab

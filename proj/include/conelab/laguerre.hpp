// Generalized Laguerre polynomials and functions on the cone:
//   L^nu_m(x) = (nu)_m sum_{|n| <= |m|} binom(m, n) (1/(nu)_n) psi_n(-x)
//   l^nu_m(x) = e^{-Tr x} L^nu_m(2x)
// together with the Euler recursion of the l^nu_m, the unbounded-picture
// basis q_{m,nu}, and the Fock/Bergman norm ratio (nu)_m.
#pragma once

#include "conelab/coeffs.hpp"
#include "conelab/gamma_cone.hpp"
#include "conelab/report.hpp"

namespace conelab {

// e^{-sigma sum_j x_j} * poly(x)
struct ExpPoly {
  SymPoly poly;
  Rational exp_scale = 0;

  double eval(const std::vector<double>& x) const;
};

SymPoly laguerre_poly(const Partition& m, const Rational& nu,
                      BinomTable& binom, const DomainParams& params);

ExpPoly laguerre_fn(const Partition& m, const Rational& nu, BinomTable& binom,
                    const DomainParams& params);

// q_{m,nu}(z) = Delta(z+e)^{-nu} psi_m((z-e)(z+e)^{-1}) on cone eigenvalues.
double q_fn_eval(const Partition& m, const Rational& nu,
                 const std::vector<double>& z_eigen, JackTable& jack);

// E f(x) = d/dt f(t x)|_{t=1}
ExpPoly euler_apply(const ExpPoly& f);

enum class EulerVariant { AHalf, DHalf };

// Exact residual of
//   2 E l_m = -nu r l_m
//             - sum_j binom(m, m-gamma_j) (m_j - 1 + nu - (j-1) kappa) l_{m-gamma_j}
//             + sum_j c_m(j) l_{m+gamma_j}
// with kappa = a/2 or d/2 per variant.
VerificationReport verify_euler_recursion(const Partition& m,
                                          const Rational& nu,
                                          EulerVariant variant,
                                          BinomTable& binom,
                                          const DomainParams& params);

// ||psi_m||^2_F / ||psi_m||^2_{H_nu(D)} = (nu)_m
Rational fock_bergman_ratio(const Partition& m, const Rational& nu,
                            const DomainParams& params);

}  // namespace conelab

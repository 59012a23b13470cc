#include "conelab/gamma_cone.hpp"

#include <cmath>

namespace conelab {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(std::complex<double> z) {
  if (z.imag() != 0.0) return false;
  double re = z.real();
  return re <= 0.0 && re == std::floor(re);
}
}  // namespace

std::complex<double> lgamma_complex(std::complex<double> z) {
  if (z.real() < 0.5) {
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(kPi) - std::log(std::sin(kPi * z)) -
           lgamma_complex(1.0 - z);
  }
  z -= 1.0;
  std::complex<double> x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
  std::complex<double> t = z + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

GammaValue gindikin_gamma(const SpectralVector& lambda,
                          const DomainParams& params) {
  if (static_cast<int>(lambda.values.size()) != params.r)
    throw Error("invalid-argument", "lambda length != rank");
  GammaValue out;
  std::complex<double> acc =
      (to_double(params.d) - params.r) / 2.0 * std::log(2.0 * kPi);
  double a = to_double(params.a);
  for (int j = 1; j <= params.r; ++j) {
    std::complex<double> arg = lambda.values[j - 1] - (j - 1) * a / 2.0;
    if (is_nonpositive_integer(arg)) {
      out.is_pole = true;
      return out;
    }
    acc += lgamma_complex(arg);
  }
  out.log_modulus = acc.real();
  out.phase = std::remainder(acc.imag(), 2.0 * kPi);
  return out;
}

Rational pochhammer(const std::vector<Rational>& lambda, const Partition& m,
                    const DomainParams& params) {
  if (static_cast<int>(lambda.size()) != params.r)
    throw Error("invalid-argument", "lambda length != rank");
  if (m.length() > params.r)
    throw Error("invalid-argument", "partition longer than rank");
  Rational out = 1;
  for (int j = 1; j <= params.r; ++j)
    out *= rising_factorial(lambda[j - 1] - (j - 1) * params.a / 2, m.part(j));
  return out;
}

Rational pochhammer(const Rational& nu, const Partition& m,
                    const DomainParams& params) {
  return pochhammer(std::vector<Rational>(params.r, nu), m, params);
}

std::complex<double> pochhammer(const std::vector<std::complex<double>>& lambda,
                                const Partition& m, const DomainParams& params) {
  if (static_cast<int>(lambda.size()) != params.r)
    throw Error("invalid-argument", "lambda length != rank");
  std::complex<double> out = 1.0;
  double a = to_double(params.a);
  for (int j = 1; j <= params.r; ++j) {
    std::complex<double> base = lambda[j - 1] - (j - 1) * a / 2.0;
    for (int i = 0; i < m.part(j); ++i) out *= base + double(i);
  }
  return out;
}

double beta_cone(const Rational& nu, const Rational& mu,
                 const DomainParams& params) {
  Rational bound = (params.r - 1) * params.a / 2;
  if (nu <= bound || mu <= bound)
    throw Error("invalid-argument",
                "beta_cone requires nu, mu > (r-1) a/2");
  auto gamma_at = [&](const Rational& s) {
    SpectralVector v;
    v.values.assign(params.r, std::complex<double>(to_double(s), 0.0));
    return gindikin_gamma(v, params);
  };
  GammaValue gn = gamma_at(nu), gm = gamma_at(mu), gs = gamma_at(nu + mu);
  if (gn.is_pole || gm.is_pole || gs.is_pole)
    throw Error("pole-of-ratio", "Gamma pole inside beta_cone");
  return std::exp(gn.log_modulus + gm.log_modulus - gs.log_modulus);
}

double c_density(const std::vector<double>& lambda,
                 const DomainParams& params) {
  if (static_cast<int>(lambda.size()) != params.r)
    throw Error("invalid-argument", "lambda length != rank");
  double a = to_double(params.a);
  Rho rh = rho(params);
  double log_acc = 0.0;
  for (int j = 0; j < params.r; ++j) {
    for (int k = j + 1; k < params.r; ++k) {
      double t = lambda[j] - lambda[k];
      if (t == 0.0) return 0.0;  // |Gamma(it)|^{-2} -> 0
      double rjk = to_double(rh.components[j] - rh.components[k]);
      std::complex<double> it(0.0, t);
      log_acc += 2.0 * std::lgamma(rjk) + 2.0 * std::lgamma(a / 2.0 + rjk);
      log_acc -= 2.0 * lgamma_complex(it).real();
      log_acc -= 2.0 * lgamma_complex(a / 2.0 + it).real();
    }
  }
  return std::exp(log_acc);
}

}  // namespace conelab

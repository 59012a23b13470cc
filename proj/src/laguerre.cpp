#include "conelab/laguerre.hpp"

#include <cmath>

#include "conelab/serialize.hpp"

namespace conelab {

double ExpPoly::eval(const std::vector<double>& x) const {
  double tr = 0;
  for (double v : x) tr += v;
  return std::exp(-to_double(exp_scale) * tr) * poly.eval(x);
}

SymPoly laguerre_poly(const Partition& m, const Rational& nu,
                      BinomTable& binom, const DomainParams& params) {
  Rational nu_m = pochhammer(nu, m, params);
  SymPoly acc(params.r);
  // psi_n(-x) = (-1)^{|n|} psi_n(x) by homogeneity
  for (const auto& n : partitions_up_to(params.r, m.weight())) {
    Rational b = binom.gen_binom(m, n);
    if (b == 0) continue;
    Rational nu_n = pochhammer(nu, n, params);
    if (nu_n == 0)
      throw Error("pole-of-ratio",
                  "(nu)_n vanishes at n = " + n.to_string());
    Rational coeff = nu_m * b / nu_n;
    if (n.weight() % 2 == 1) coeff = -coeff;
    acc = acc + binom.jack().psi(n) * coeff;
  }
  return acc;
}

ExpPoly laguerre_fn(const Partition& m, const Rational& nu, BinomTable& binom,
                    const DomainParams& params) {
  ExpPoly out;
  out.exp_scale = 1;
  out.poly = laguerre_poly(m, nu, binom, params).scale_variables(2);
  return out;
}

double q_fn_eval(const Partition& m, const Rational& nu,
                 const std::vector<double>& z_eigen, JackTable& jack) {
  const int r = jack.params().r;
  if (static_cast<int>(z_eigen.size()) != r)
    throw Error("invalid-argument", "eigenvalue vector length != rank");
  double det_factor = 1.0;
  std::vector<double> w(r);
  for (int i = 0; i < r; ++i) {
    if (z_eigen[i] <= 0)
      throw Error("invalid-argument", "q_fn_eval needs z in the open cone");
    det_factor *= std::pow(z_eigen[i] + 1.0, -to_double(nu));
    w[i] = (z_eigen[i] - 1.0) / (z_eigen[i] + 1.0);
  }
  return det_factor * jack.psi(m).eval(w);
}

ExpPoly euler_apply(const ExpPoly& f) {
  ExpPoly out;
  out.exp_scale = f.exp_scale;
  SymPoly m1 = SymPoly::monomial_sym(f.poly.num_vars(), Partition({1}));
  out.poly = f.poly.euler() - (m1 * f.poly) * f.exp_scale;
  return out;
}

VerificationReport verify_euler_recursion(const Partition& m,
                                          const Rational& nu,
                                          EulerVariant variant,
                                          BinomTable& binom,
                                          const DomainParams& params) {
  VerificationReport rep;
  rep.identity = "euler";
  rep.tolerance = "exact";
  rep.params["r"] = params.r;
  rep.params["a"] = format_rational(params.a);
  rep.params["nu"] = format_rational(nu);
  rep.params["m"] = m.to_string();
  rep.params["variant"] = variant == EulerVariant::AHalf ? "a-half" : "d-half";

  const int r = params.r;
  Rational kappa =
      variant == EulerVariant::AHalf ? params.a / 2 : params.d / 2;

  ExpPoly lm = laguerre_fn(m, nu, binom, params);
  SymPoly lhs = euler_apply(lm).poly * Rational(2);

  SymPoly rhs = lm.poly * (-nu * r);
  for (int j = 1; j <= r; ++j) {
    if (auto down = m.step_down(j)) {
      StepCoeff b = binom_step(m, j, params);
      if (!b.defined_at)
        throw Error("coefficient-undefined",
                    "binom_step singular at m = " + m.to_string());
      Rational lin = Rational(m.part(j)) - 1 + nu - kappa * (j - 1);
      rhs = rhs - laguerre_fn(*down, nu, binom, params).poly * (b.value * lin);
    }
    if (auto up = m.step_up(j, r)) {
      StepCoeff c = c_coeff(m, j, params);
      if (!c.defined_at)
        throw Error("coefficient-undefined",
                    "c_coeff singular at m = " + m.to_string());
      rhs = rhs + laguerre_fn(*up, nu, binom, params).poly * c.value;
    }
  }

  SymPoly residual = lhs - rhs;
  rep.status = residual.is_zero() ? "exact-zero" : "failed";
  rep.residual = residual.is_zero() ? nlohmann::ordered_json::array()
                                    : sympoly_terms_json(residual);
  return rep;
}

Rational fock_bergman_ratio(const Partition& m, const Rational& nu,
                            const DomainParams& params) {
  Rational v = pochhammer(nu, m, params);
  return v;
}

}  // namespace conelab

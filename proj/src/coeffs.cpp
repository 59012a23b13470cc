#include "conelab/coeffs.hpp"

namespace conelab {

namespace {
template <typename S, typename Coeff>
Coeff binom_step_generic(const std::vector<S>& n, int k, const S& half_a,
                         int r) {
  Coeff out;
  if (k < 1 || k > r) throw Error("invalid-argument", "k outside 1..r");
  S value = n[k - 1] + half_a * S(r - k);
  for (int j = 1; j <= r; ++j) {
    if (j == k) continue;
    S den = n[k - 1] - n[j - 1] + half_a * S(j - k);
    S num = den - half_a;
    if (den == S(0)) {
      out.defined_at = false;
      out.value = 0;
      return out;
    }
    value *= num / den;
  }
  out.value = value;
  return out;
}

template <typename S, typename Coeff>
Coeff c_coeff_generic(const std::vector<S>& n, int k, const S& half_a, int r) {
  Coeff out;
  if (k < 1 || k > r) throw Error("invalid-argument", "k outside 1..r");
  S value = S(1);
  for (int j = 1; j <= r; ++j) {
    if (j == k) continue;
    S den = n[j - 1] - n[k - 1] - half_a * S(j - k);
    S num = den - half_a;
    if (den == S(0)) {
      out.defined_at = false;
      out.value = 0;
      return out;
    }
    value *= num / den;
  }
  out.value = value;
  return out;
}
}  // namespace

StepCoeff binom_step(const std::vector<Rational>& n, int k,
                     const DomainParams& params) {
  if (static_cast<int>(n.size()) != params.r)
    throw Error("invalid-argument", "argument length != rank");
  return binom_step_generic<Rational, StepCoeff>(n, k, params.a / 2, params.r);
}

StepCoeff c_coeff(const std::vector<Rational>& n, int k,
                  const DomainParams& params) {
  if (static_cast<int>(n.size()) != params.r)
    throw Error("invalid-argument", "argument length != rank");
  return c_coeff_generic<Rational, StepCoeff>(n, k, params.a / 2, params.r);
}

StepCoeffComplex binom_step(const std::vector<std::complex<double>>& n, int k,
                            const DomainParams& params) {
  if (static_cast<int>(n.size()) != params.r)
    throw Error("invalid-argument", "argument length != rank");
  std::complex<double> half_a(to_double(params.a) / 2.0, 0.0);
  return binom_step_generic<std::complex<double>, StepCoeffComplex>(
      n, k, half_a, params.r);
}

StepCoeffComplex c_coeff(const std::vector<std::complex<double>>& n, int k,
                         const DomainParams& params) {
  if (static_cast<int>(n.size()) != params.r)
    throw Error("invalid-argument", "argument length != rank");
  std::complex<double> half_a(to_double(params.a) / 2.0, 0.0);
  return c_coeff_generic<std::complex<double>, StepCoeffComplex>(n, k, half_a,
                                                                 params.r);
}

SymbolicFraction binom_step_symbolic(const std::vector<MultiPoly>& args, int k,
                                     const DomainParams& params) {
  const int r = params.r;
  if (static_cast<int>(args.size()) != r || k < 1 || k > r)
    throw Error("invalid-argument", "bad symbolic binom_step arguments");
  Rational half_a = params.a / 2;
  int nv = args[0].num_vars();
  SymbolicFraction out;
  out.num_factors.push_back(args[k - 1] +
                            MultiPoly::constant(nv, half_a * (r - k)));
  for (int j = 1; j <= r; ++j) {
    if (j == k) continue;
    MultiPoly den = args[k - 1] - args[j - 1] +
                    MultiPoly::constant(nv, half_a * (j - k));
    out.num_factors.push_back(den - MultiPoly::constant(nv, half_a));
    out.den_factors.push_back(den);
  }
  return out;
}

SymbolicFraction c_coeff_symbolic(const std::vector<MultiPoly>& args, int k,
                                  const DomainParams& params) {
  const int r = params.r;
  if (static_cast<int>(args.size()) != r || k < 1 || k > r)
    throw Error("invalid-argument", "bad symbolic c_coeff arguments");
  Rational half_a = params.a / 2;
  int nv = args[0].num_vars();
  SymbolicFraction out;
  for (int j = 1; j <= r; ++j) {
    if (j == k) continue;
    MultiPoly den = args[j - 1] - args[k - 1] -
                    MultiPoly::constant(nv, half_a * (j - k));
    out.num_factors.push_back(den - MultiPoly::constant(nv, half_a));
    out.den_factors.push_back(den);
  }
  return out;
}

const std::map<Partition, Rational>& BinomTable::row(const Partition& m) {
  auto it = rows_.find(m);
  if (it != rows_.end()) return it->second;
  const int r = jack_.params().r;
  // psi_m(e + x), re-expanded in the jack basis
  SymPoly psi_m = jack_.psi(m);
  MultiPoly shifted = psi_m.expand();
  for (int i = 0; i < r; ++i) shifted = shifted.shift_var(i, 1);
  SymPoly collected = SymPoly::collect(shifted);
  return rows_.emplace(m, jack_.to_jack_basis(collected)).first->second;
}

Rational BinomTable::gen_binom(const Partition& m, const Partition& n) {
  if (n.weight() > m.weight())
    throw Error("invalid-argument", "gen_binom requires |n| <= |m|");
  std::lock_guard<std::mutex> lock(mutex_);
  const auto& r = row(m);
  auto it = r.find(n);
  return it == r.end() ? Rational(0) : it->second;
}

}  // namespace conelab

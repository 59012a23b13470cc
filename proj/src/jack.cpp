#include "conelab/jack.hpp"

#include <algorithm>

namespace conelab {

JackTable::JackTable(const DomainParams& params, int weight_budget)
    : params_(params), alpha_(2 / params.a), weight_budget_(weight_budget) {}

const SymPoly& JackTable::dcolumn(const Partition& mu) {
  auto it = dcol_.find(mu);
  if (it != dcol_.end()) return it->second;

  const int r = params_.r;
  MultiPoly acc(r);
  MultiPoly expanded = SymPoly::monomial_sym(r, mu).expand();

  // (alpha/2) sum_i x_i^2 d_i^2
  for (const auto& [e, c] : expanded.terms()) {
    Rational w = 0;
    for (int i = 0; i < r; ++i) w += Rational(e[i]) * (e[i] - 1);
    acc.add_term(e, c * w * alpha_ / 2);
  }

  // sum_{i<j} (x_i^2 d_i - x_j^2 d_j)/(x_i - x_j): the numerator is
  // antisymmetric under i <-> j on a symmetric input, so the division
  // is exact.
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      MultiPoly num(r);
      for (const auto& [e, c] : expanded.terms()) {
        if (e[i] > 0) {
          auto f = e;
          f[i] += 1;
          num.add_term(f, c * e[i]);
        }
        if (e[j] > 0) {
          auto f = e;
          f[j] += 1;
          num.add_term(f, -c * e[j]);
        }
      }
      acc = acc + num.divide_by_var_difference(i, j);
    }
  }

  SymPoly col = SymPoly::collect(acc);
  eigen_[mu] = col.coeff(mu);
  return dcol_.emplace(mu, std::move(col)).first->second;
}

const SymPoly& JackTable::psi_unlocked(const Partition& m) {
  auto it = psi_.find(m);
  if (it != psi_.end()) return it->second;
  if (m.weight() > weight_budget_)
    throw Error("resource-limit", "psi weight " + std::to_string(m.weight()) +
                                      " exceeds budget");
  if (m.length() > params_.r)
    throw Error("invalid-argument", "partition longer than rank");

  const int r = params_.r;
  const int w = m.weight();

  dcolumn(m);
  Rational em = eigen_.at(m);

  std::map<Partition, Rational> v;
  v[m] = 1;
  // reverse-lex within a weight refines dominance from the top
  for (const auto& kappa : partitions_of(r, w)) {
    if (kappa == m || !kappa.dominated_by(m)) continue;
    dcolumn(kappa);
    Rational num = 0;
    for (const auto& [mu, vmu] : v) {
      if (mu == kappa) continue;
      num += vmu * dcol_.at(mu).coeff(kappa);
    }
    if (num == 0) continue;
    Rational den = em - eigen_.at(kappa);
    if (den == 0)
      throw Error("invalid-argument", "repeated Jack eigenvalue in a dominance chain");
    v[kappa] = num / den;
  }

  SymPoly p(r);
  for (const auto& [kappa, c] : v) p.add_term(kappa, c);
  Rational at_e = p.eval(std::vector<Rational>(r, Rational(1)));
  if (at_e == 0)
    throw Error("invalid-argument", "Jack polynomial vanishes at the identity");
  p = p * (1 / at_e);
  return psi_.emplace(m, std::move(p)).first->second;
}

SymPoly JackTable::psi(const Partition& m) {
  std::lock_guard<std::mutex> lock(mutex_);
  return psi_unlocked(m);
}

Rational JackTable::lead_coeff(const Partition& m) {
  std::lock_guard<std::mutex> lock(mutex_);
  return psi_unlocked(m).coeff(m);
}

std::map<Partition, Rational> JackTable::to_jack_basis_unlocked(const SymPoly& p) {
  if (p.num_vars() != params_.r)
    throw Error("invalid-argument", "mismatched num_vars");
  std::map<Partition, Rational> out;
  SymPoly work = p;
  for (int w = p.degree(); w >= 0; --w) {
    for (const auto& n : partitions_of(params_.r, w)) {
      Rational c = work.coeff(n);
      if (c == 0) continue;
      const SymPoly& psi_n = psi_unlocked(n);
      Rational cn = c / psi_n.coeff(n);
      out[n] = cn;
      work = work - psi_n * cn;
    }
  }
  if (!work.is_zero())
    throw Error("invalid-argument", "jack-basis reduction left a remainder");
  return out;
}

std::map<Partition, Rational> JackTable::to_jack_basis(const SymPoly& p) {
  std::lock_guard<std::mutex> lock(mutex_);
  return to_jack_basis_unlocked(p);
}

std::vector<Rational> cayley_univariate_series(int b, const Rational& nu,
                                               int cap) {
  if (b < 0) throw Error("invalid-argument", "negative exponent in Cayley factor");
  // (1-x)^{-c} = sum_k (c)_k / k! x^k with c = b + nu
  Rational c = b + nu;
  std::vector<Rational> inv(cap + 1);
  inv[0] = 1;
  for (int k = 1; k <= cap; ++k) inv[k] = inv[k - 1] * (c + (k - 1)) / k;
  // multiply by (1+x)^b
  std::vector<Rational> out(cap + 1, Rational(0));
  Rational binom = 1;
  for (int t = 0; t <= b && t <= cap; ++t) {
    for (int k = 0; k + t <= cap; ++k) out[k + t] += binom * inv[k];
    binom = binom * (b - t) / (t + 1);
  }
  return out;
}

SymPoly expand_cayley_factor(const CayleyFactorSpec& spec, JackTable& jack,
                             int cap) {
  if (cap < 0) throw Error("invalid-argument", "negative cap");
  const int r = jack.params().r;
  SymPoly psi_m = jack.psi(spec.m);

  // Per-variable series for each exponent value that occurs.
  std::map<int, std::vector<Rational>> series;
  for (const auto& [kappa, c] : psi_m.coeffs())
    for (int b : kappa.padded(r)) series.emplace(b, std::vector<Rational>());
  series.emplace(0, std::vector<Rational>());
  for (auto& [b, s] : series) s = cayley_univariate_series(b, spec.nu, cap);

  // Sum over the monomial orbit of each psi coefficient; the result is
  // symmetric, so only weakly decreasing exponents are collected.
  std::map<std::vector<int>, Rational> total;
  std::vector<int> key(r);
  for (const auto& [kappa, c] : psi_m.coeffs()) {
    for (const auto& beta : orbit(kappa, r)) {
      // tensor product of univariate series, truncated to total degree cap
      std::map<std::vector<int>, Rational> cur;
      cur.emplace(std::vector<int>(), c);
      for (int i = 0; i < r; ++i) {
        std::map<std::vector<int>, Rational> next;
        const auto& s = series.at(beta[i]);
        for (const auto& [e, q] : cur) {
          int used = 0;
          for (int x : e) used += x;
          for (int k = 0; k + used <= cap; ++k) {
            if (s[k] == 0) continue;
            auto f = e;
            f.push_back(k);
            auto it = next.find(f);
            if (it == next.end())
              next.emplace(std::move(f), q * s[k]);
            else
              it->second += q * s[k];
          }
        }
        cur = std::move(next);
      }
      for (const auto& [e, q] : cur) {
        auto it = total.find(e);
        if (it == total.end())
          total.emplace(e, q);
        else
          it->second += q;
      }
    }
  }

  SymPoly out(r);
  out.set_degree_cap(cap);
  for (const auto& [e, q] : total) {
    if (q == 0) continue;
    if (std::is_sorted(e.begin(), e.end(), std::greater<int>()))
      out.add_term(Partition(e), q);
  }
  return out;
}

}  // namespace conelab

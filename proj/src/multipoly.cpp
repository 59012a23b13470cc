#include "conelab/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace conelab {

MultiPoly MultiPoly::constant(int num_vars, const Rational& c) {
  MultiPoly p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int num_vars, int index) {
  MultiPoly p(num_vars);
  Exponents e(num_vars, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::monomial(Exponents e, const Rational& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly out(*this);
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly out(*this);
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(num_vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly out(num_vars_);
  Exponents e(num_vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  MultiPoly out(num_vars_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

MultiPoly MultiPoly::divide_by_var_difference(int i, int j) const {
  // Synthetic division: repeatedly peel the term of highest x_i-degree.
  // (x_i - x_j) * c x^g = c x^{g+e_i} - c x^{g+e_j}, so subtracting
  // quotient terms strictly lowers the x_i-degree of the remainder.
  MultiPoly rem(*this), quot(num_vars_);
  while (!rem.terms_.empty()) {
    auto best = rem.terms_.begin();
    for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it)
      if (it->first[i] > best->first[i]) best = it;
    if (best->first[i] == 0)
      throw Error("invalid-argument", "polynomial not divisible by variable difference");
    Exponents q = best->first;
    q[i] -= 1;
    Rational c = best->second;
    quot.add_term(q, c);
    rem.add_term(best->first, -c);  // removes the peeled term
    Exponents swapped = q;
    swapped[j] += 1;
    rem.add_term(swapped, c);
  }
  return quot;
}

MultiPoly MultiPoly::shift_var(int i, const Rational& delta) const {
  if (delta == 0) return *this;
  MultiPoly out(num_vars_);
  for (const auto& [e, c] : terms_) {
    // (x_i + delta)^k expanded by the binomial theorem
    int k = e[i];
    Rational binom = 1;
    Rational dp = 1;
    for (int t = 0; t <= k; ++t) {
      Exponents f = e;
      f[i] = k - t;
      out.add_term(f, c * binom * dp);
      binom = binom * (k - t) / (t + 1);
      dp *= delta;
    }
  }
  return out;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < num_vars_; ++i) t *= rational_pow(point[i], e[i]);
    acc += t;
  }
  return acc;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << format_rational(c);
    for (int i = 0; i < num_vars_; ++i)
      if (e[i] > 0) os << "*x" << i << "^" << e[i];
  }
  return os.str();
}

}  // namespace conelab

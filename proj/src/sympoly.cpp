#include "conelab/sympoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace conelab {

SymPoly SymPoly::constant(int num_vars, const Rational& c) {
  SymPoly p(num_vars);
  p.add_term(Partition(), c);
  return p;
}

SymPoly SymPoly::monomial_sym(int num_vars, const Partition& kappa) {
  if (kappa.length() > num_vars)
    throw Error("invalid-argument", "partition longer than num_vars");
  SymPoly p(num_vars);
  p.add_term(kappa, 1);
  return p;
}

void SymPoly::set_degree_cap(std::optional<int> cap) {
  degree_cap_ = cap;
  if (cap) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
      if (it->first.weight() > *cap)
        it = coeffs_.erase(it);
      else
        ++it;
    }
  }
}

int SymPoly::degree() const {
  int d = -1;
  for (const auto& [k, c] : coeffs_) d = std::max(d, k.weight());
  return d;
}

Rational SymPoly::coeff(const Partition& kappa) const {
  auto it = coeffs_.find(kappa);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymPoly::add_term(const Partition& kappa, const Rational& c) {
  if (c == 0) return;
  if (kappa.length() > num_vars_)
    throw Error("invalid-argument", "partition longer than num_vars");
  if (degree_cap_ && kappa.weight() > *degree_cap_) return;
  auto it = coeffs_.find(kappa);
  if (it == coeffs_.end()) {
    coeffs_.emplace(kappa, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

void SymPoly::check_same_vars(const SymPoly& o) const {
  if (num_vars_ != o.num_vars_)
    throw Error("invalid-argument", "mismatched num_vars");
}

std::optional<int> SymPoly::merged_cap(const SymPoly& x, const SymPoly& y) {
  if (x.degree_cap_ && y.degree_cap_)
    return std::min(*x.degree_cap_, *y.degree_cap_);
  if (x.degree_cap_) return x.degree_cap_;
  return y.degree_cap_;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
  check_same_vars(o);
  SymPoly out(num_vars_);
  out.degree_cap_ = merged_cap(*this, o);
  for (const auto& [k, c] : coeffs_) out.add_term(k, c);
  for (const auto& [k, c] : o.coeffs_) out.add_term(k, c);
  return out;
}

SymPoly SymPoly::operator-(const SymPoly& o) const { return *this + (-o); }

SymPoly SymPoly::operator-() const {
  SymPoly out(num_vars_);
  out.degree_cap_ = degree_cap_;
  for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k, -c);
  return out;
}

SymPoly SymPoly::operator*(const Rational& c) const {
  SymPoly out(num_vars_);
  out.degree_cap_ = degree_cap_;
  if (c == 0) return out;
  for (const auto& [k, q] : coeffs_) out.coeffs_.emplace(k, q * c);
  return out;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
  check_same_vars(o);
  SymPoly out(num_vars_);
  out.degree_cap_ = merged_cap(*this, o);
  // Expand both factors into plain monomials, multiply, and read the
  // m-basis coefficients off the weakly decreasing exponent vectors.
  std::map<std::vector<int>, Rational> prod;
  std::vector<int> e(num_vars_);
  for (const auto& [ka, ca] : coeffs_) {
    for (const auto& ea : orbit(ka, num_vars_)) {
      for (const auto& [kb, cb] : o.coeffs_) {
        if (out.degree_cap_ && ka.weight() + kb.weight() > *out.degree_cap_)
          continue;
        Rational cab = ca * cb;
        for (const auto& eb : orbit(kb, num_vars_)) {
          for (int i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
          // only weakly decreasing exponent vectors are needed
          if (!std::is_sorted(e.begin(), e.end(), std::greater<int>()))
            continue;
          auto it = prod.find(e);
          if (it == prod.end())
            prod.emplace(e, cab);
          else
            it->second += cab;
        }
      }
    }
  }
  for (auto& [e2, c] : prod)
    if (c != 0) out.add_term(Partition(e2), c);
  return out;
}

bool SymPoly::operator==(const SymPoly& o) const {
  return num_vars_ == o.num_vars_ && coeffs_ == o.coeffs_;
}

SymPoly SymPoly::homogeneous_component(int w) const {
  SymPoly out(num_vars_);
  for (const auto& [k, c] : coeffs_)
    if (k.weight() == w) out.coeffs_.emplace(k, c);
  return out;
}

SymPoly SymPoly::scale_variables(const Rational& t) const {
  SymPoly out(num_vars_);
  out.degree_cap_ = degree_cap_;
  for (const auto& [k, c] : coeffs_)
    out.coeffs_.emplace(k, c * rational_pow(t, k.weight()));
  return out;
}

SymPoly SymPoly::euler() const {
  SymPoly out(num_vars_);
  out.degree_cap_ = degree_cap_;
  for (const auto& [k, c] : coeffs_)
    if (k.weight() > 0) out.coeffs_.emplace(k, c * k.weight());
  return out;
}

Rational SymPoly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != num_vars_)
    throw Error("invalid-argument", "point length != num_vars");
  Rational acc = 0;
  for (const auto& [k, c] : coeffs_) {
    Rational orbit_sum = 0;
    for (const auto& e : orbit(k, num_vars_)) {
      Rational t = 1;
      for (int i = 0; i < num_vars_; ++i) t *= rational_pow(point[i], e[i]);
      orbit_sum += t;
    }
    acc += c * orbit_sum;
  }
  return acc;
}

namespace {
template <typename S>
S eval_generic(const SymPoly& p, const std::vector<S>& point) {
  if (static_cast<int>(point.size()) != p.num_vars())
    throw Error("invalid-argument", "point length != num_vars");
  S acc = S(0);
  for (const auto& [k, c] : p.coeffs()) {
    S orbit_sum = S(0);
    for (const auto& e : orbit(k, p.num_vars())) {
      S t = S(1);
      for (int i = 0; i < p.num_vars(); ++i)
        for (int q = 0; q < e[i]; ++q) t *= point[i];
      orbit_sum += t;
    }
    acc += S(to_double(c)) * orbit_sum;
  }
  return acc;
}
}  // namespace

double SymPoly::eval(const std::vector<double>& point) const {
  return eval_generic<double>(*this, point);
}

std::complex<double> SymPoly::eval(
    const std::vector<std::complex<double>>& point) const {
  return eval_generic<std::complex<double>>(*this, point);
}

MultiPoly SymPoly::expand() const {
  MultiPoly out(num_vars_);
  for (const auto& [k, c] : coeffs_)
    for (const auto& e : orbit(k, num_vars_)) out.add_term(e, c);
  return out;
}

SymPoly SymPoly::collect(const MultiPoly& p) {
  SymPoly out(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    if (std::is_sorted(e.begin(), e.end(), std::greater<int>()))
      out.add_term(Partition(e), c);
  }
  return out;
}

std::string SymPoly::to_json() const {
  std::ostringstream os;
  os << "{\"num_vars\": " << num_vars_ << ", \"terms\": [";
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    if (!first) os << ", ";
    first = false;
    os << "{\"partition\": \"" << k.to_string() << "\", \"coeff\": \""
       << format_rational(c) << "\"}";
  }
  os << "]}";
  return os.str();
}

}  // namespace conelab

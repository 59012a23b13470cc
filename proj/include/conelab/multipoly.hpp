// Sparse multivariate polynomials over the rationals. Not symmetric by
// construction; used where symmetry is broken (shifted spectral variables,
// the divided-difference part of the Jack eigenoperator).
#pragma once

#include <map>
#include <vector>

#include "conelab/rational.hpp"

namespace conelab {

class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(int num_vars) : num_vars_(num_vars) {}
  static MultiPoly constant(int num_vars, const Rational& c);
  static MultiPoly variable(int num_vars, int index);  // 0-based
  static MultiPoly monomial(Exponents e, const Rational& c);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  MultiPoly operator-() const;

  bool operator==(const MultiPoly& o) const {
    return num_vars_ == o.num_vars_ && terms_ == o.terms_;
  }

  // Exact division by (x_i - x_j); throws if not divisible.
  MultiPoly divide_by_var_difference(int i, int j) const;

  // Substitute x_i -> x_i + delta.
  MultiPoly shift_var(int i, const Rational& delta) const;

  Rational eval(const std::vector<Rational>& point) const;

  std::string to_string() const;  // debugging / reports

 private:
  int num_vars_ = 0;
  std::map<Exponents, Rational> terms_;
};

}  // namespace conelab

// Exact symmetric polynomials in r variables over the rationals, stored in
// the monomial-symmetric basis m_kappa. A value with degree_cap set is a
// truncated symmetric power series; products truncate to the smaller cap.
#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conelab/multipoly.hpp"
#include "conelab/partition.hpp"

namespace conelab {

class SymPoly {
 public:
  SymPoly() = default;
  explicit SymPoly(int num_vars) : num_vars_(num_vars) {}
  static SymPoly constant(int num_vars, const Rational& c);
  // The basis element m_kappa.
  static SymPoly monomial_sym(int num_vars, const Partition& kappa);

  int num_vars() const { return num_vars_; }
  const std::map<Partition, Rational>& coeffs() const { return coeffs_; }
  std::optional<int> degree_cap() const { return degree_cap_; }
  void set_degree_cap(std::optional<int> cap);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;  // max weight with nonzero coefficient; -1 if zero
  Rational coeff(const Partition& kappa) const;
  void add_term(const Partition& kappa, const Rational& c);

  SymPoly operator+(const SymPoly& o) const;
  SymPoly operator-(const SymPoly& o) const;
  SymPoly operator*(const SymPoly& o) const;
  SymPoly operator*(const Rational& c) const;
  SymPoly operator-() const;
  bool operator==(const SymPoly& o) const;

  SymPoly homogeneous_component(int w) const;

  // x -> t x on the homogeneous component of weight w multiplies it by t^w.
  SymPoly scale_variables(const Rational& t) const;

  // The Euler operator E f = d/dt f(t x)|_{t=1}.
  SymPoly euler() const;

  Rational eval(const std::vector<Rational>& point) const;
  double eval(const std::vector<double>& point) const;
  std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

  MultiPoly expand() const;  // full monomial expansion
  // Collects a (symmetric) multipoly back into the m-basis.
  static SymPoly collect(const MultiPoly& p);

  std::string to_json() const;

 private:
  int num_vars_ = 0;
  std::optional<int> degree_cap_;
  std::map<Partition, Rational> coeffs_;

  void check_same_vars(const SymPoly& o) const;
  static std::optional<int> merged_cap(const SymPoly& x, const SymPoly& y);
};

}  // namespace conelab

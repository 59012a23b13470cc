// Exact rational scalars used by all symbolic modules.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace conelab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Library-wide error carrying a short machine-readable kind
// ("invalid-argument", "pole-of-ratio", "non-finite", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

inline double to_double(const Rational& q) {
  return q.convert_to<double>();
}

// Parses "7/2", "-3", "0". Whitespace is not accepted.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw Error("invalid-argument", "empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw Error("invalid-argument", "zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw Error("invalid-argument", "bad rational literal '" + s + "'");
  }
}

// Canonical form: integers print without a slash, everything else as "num/den".
inline std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Ordinary rising factorial x(x+1)...(x+n-1).
inline Rational rising_factorial(const Rational& x, int n) {
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= x + i;
  return r;
}

inline Rational rational_pow(const Rational& x, int n) {
  if (n < 0) {
    if (x == 0) throw Error("invalid-argument", "0 to a negative power");
    return 1 / rational_pow(x, -n);
  }
  Rational r = 1, b = x;
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

inline Rational factorial(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace conelab

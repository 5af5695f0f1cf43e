#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and normalized
// fractions. Every symbolic coefficient in the library lives in this field;
// floating point appears only at evaluation boundaries.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace logint {

using Integer = boost::multiprecision::cpp_int;

// Stored in lowest terms with positive denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& p, const Integer& q) {
  if (q == 0) throw std::invalid_argument("make_rational: zero denominator");
  if (q < 0) return Rational(-p, -q);
  return Rational(p, q);
}

inline Rational make_rational(long long p, long long q) {
  return make_rational(Integer(p), Integer(q));
}

inline Integer rational_num(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline Integer rational_den(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string rational_to_string(const Rational& r) {
  const Integer den = rational_den(r);
  std::string s = rational_num(r).str();
  if (den != 1) s += "/" + den.str();
  return s;
}

inline Rational pow_rational(Rational base, unsigned exp) {
  Rational result(1);
  while (exp > 0) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1u;
  }
  return result;
}

inline Integer factorial(unsigned n) {
  Integer result(1);
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace logint

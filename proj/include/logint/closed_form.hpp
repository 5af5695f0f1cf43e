#pragma once

// Exact closed form of the integral family
//   f_n(a) = integral_0^inf ln^{n-1}x / ((x-1)(x+a)) dx,   n >= 2, a > 0.
// With b = ln a,
//   n (1+a) f_n(a) = P_n(b)
//                  = [n even] 2 n! zeta(n)
//                    + sum_j C(n,2j) (2^{2j}-2) (-1)^{j-1} B_{2j} pi^{2j} b^{n-2j},
// and the even-n zeta constant folds into the pi^n coefficient exactly.
// h_n = P_n / n = (1+a) f_n(a).

#include "logint/bernoulli.hpp"
#include "logint/log_poly.hpp"
#include "logint/numeric_config.hpp"
#include "logint/special.hpp"

#include <cmath>
#include <stdexcept>

namespace logint {

enum class Normalization { P, h };

struct ClosedForm {
  int n = 0;
  Normalization normalization = Normalization::P;
  LogPoly poly;
};

namespace detail {

// The Bernoulli half-shift sum as an exact polynomial in b. Its coefficient
// of b^{n-2j} is C(n,2j) (2^{2j}-2) (-1)^{j-1} B_{2j} pi^{2j}; every term is
// a positive rational times an even pi power.
inline LogPoly log_sum_poly(int n) {
  LogPoly sum;
  for (int j = 0; 2 * j <= n; ++j) {
    Rational c = Rational(binomial(static_cast<unsigned>(n), 2 * j)) *
                 bernoulli_number(2 * j) *
                 Rational((Integer(1) << (2 * j)) - 2);
    if (j % 2 == 0) c = -c;  // (-1)^{j-1}
    sum += LogPoly::term(static_cast<unsigned>(n - 2 * j),
                         PiExpr::pi_power(static_cast<unsigned>(j), c));
  }
  return sum;
}

}  // namespace detail

/// P_n with P_n(ln a) = n (1+a) f_n(a), exact.
inline ClosedForm normalized_poly(int n) {
  if (n < 2) throw std::invalid_argument("normalized_poly: n < 2");
  LogPoly p = detail::log_sum_poly(n);
  if (n % 2 == 0) {
    const Rational two_nfact = 2 * Rational(factorial(static_cast<unsigned>(n)));
    p += LogPoly::term(0, zeta_even_exact(n) * two_nfact);
  }
  return {n, Normalization::P, std::move(p)};
}

/// h_n = P_n / n, so that h_n(ln a) = (1+a) f_n(a).
inline ClosedForm h_poly(int n) {
  ClosedForm form = normalized_poly(n);
  form.normalization = Normalization::h;
  form.poly = form.poly / Rational(n);
  return form;
}

/// f_n(a) from the exact closed form.
inline double f_closed_eval(int n, double a) {
  if (!(a > 0.0)) throw std::invalid_argument("f_closed_eval: a must be > 0");
  const ClosedForm form = normalized_poly(n);
  return form.poly.eval(std::log(a), detail::kPi) / (n * (1.0 + a));
}

/// f_n(a) from the polylogarithm representation
/// ((-1)^n (n-1)! / (1+a)) { [1+(-1)^n] zeta(n) - Li_n(-1/a) + (-1)^{n-1} Li_n(-a) }.
inline double f_polylog_eval(int n, double a, const NumericConfig& cfg = {}) {
  if (n < 2) throw std::invalid_argument("f_polylog_eval: n < 2");
  if (!(a > 0.0)) throw std::invalid_argument("f_polylog_eval: a must be > 0");
  const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
  const double zeta_term = (n % 2 == 0) ? 2.0 * zeta_numeric(n, cfg) : 0.0;
  const double li_inv = polylog_numeric(n, -1.0 / a, cfg);
  const double li_neg = polylog_numeric(n, -a, cfg);
  return sign_n * detail::factorial_double(n - 1) / (1.0 + a) *
         (zeta_term - li_inv - sign_n * li_neg);
}

/// Residual of the polylogarithm inversion identity
/// (-1)^{n-1} Li_n(-a) - Li_n(-1/a) = (-1)^n S_n(ln a) / n!
/// with S_n evaluated from the exact half-shift polynomial.
inline double inversion_check(int n, double a, const NumericConfig& cfg = {}) {
  if (n < 2) throw std::invalid_argument("inversion_check: n < 2");
  if (!(a > 0.0)) throw std::invalid_argument("inversion_check: a must be > 0");
  const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
  const double lhs = -sign_n * polylog_numeric(n, -a, cfg) -
                     polylog_numeric(n, -1.0 / a, cfg);
  const double rhs = sign_n *
                     detail::log_sum_poly(n).eval(std::log(a), detail::kPi) /
                     detail::factorial_double(n);
  return std::fabs(lhs - rhs);
}

}  // namespace logint

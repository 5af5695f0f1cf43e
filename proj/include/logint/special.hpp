#pragma once

// Floating-point special functions backing the polylogarithm route and the
// table-entry spot checks: zeta, Li_n, Gamma, digamma, Hurwitz zeta and the
// Dirichlet L-series built from it. Everything is binary64; exact results
// belong to the PiExpr/LogPoly layer instead.

#include "logint/bernoulli.hpp"
#include "logint/numeric_config.hpp"
#include "logint/pi_expr.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace logint {

namespace detail {

inline constexpr double kPi = std::numbers::pi_v<double>;

inline double ipow(double x, int e) {
  double acc = 1.0;
  for (int i = 0; i < e; ++i) acc *= x;
  return acc;
}

inline double factorial_double(int n) {
  double acc = 1.0;
  for (int i = 2; i <= n; ++i) acc *= i;
  return acc;
}

inline double b2j_double(int j) {
  static const std::array<double, 16> table = [] {
    std::array<double, 16> t{};
    for (int i = 0; i < 16; ++i) t[i] = to_double(bernoulli_number(2 * i));
    return t;
  }();
  return table.at(static_cast<size_t>(j));
}

inline double b2j_over_factorial(int j) {
  static const std::array<double, 16> table = [] {
    std::array<double, 16> t{};
    for (int i = 1; i < 16; ++i)
      t[i] = to_double(bernoulli_number(2 * i) / Rational(factorial(2 * i)));
    return t;
  }();
  return table.at(static_cast<size_t>(j));
}

// Li_n(x) for -1 <= x <= 0 straight from the defining series. Alternating,
// so consecutive partial sums bracket the limit: adding half of the first
// omitted term keeps the error well under the first-omitted-term bound even
// when the |x| = 1 tail runs into the term cap.
inline double polylog_series(int n, double x, const NumericConfig& cfg) {
  if (x == 0.0) return 0.0;
  double sum = 0.0;
  double xk = 1.0;
  long k = 0;
  while (k < cfg.max_terms) {
    ++k;
    xk *= x;
    const double term = xk / ipow(static_cast<double>(k), n);
    sum += term;
    if (std::fabs(term) <= 0.1 * cfg.target_eps * std::fabs(sum)) break;
  }
  sum += 0.5 * xk * x / ipow(static_cast<double>(k + 1), n);
  return sum;
}

// sum_j C(n,2j) (2^{2j}-2) (-1)^{j-1} B_{2j} pi^{2j} b^{n-2j}; the real form
// of the Bernoulli half-shift expansion that drives the inversion identity.
inline double inversion_tail_sum(int n, double b) {
  double acc = 0.0;
  const double pi2 = kPi * kPi;
  double pi_pow = 1.0;
  for (int j = 0; 2 * j <= n; ++j) {
    const double coeff =
        to_double(Rational(binomial(n, 2 * j)) * bernoulli_number(2 * j)) *
        (std::ldexp(1.0, 2 * j) - 2.0) * (j % 2 == 0 ? -1.0 : 1.0);
    acc += coeff * pi_pow * ipow(b, n - 2 * j);
    pi_pow *= pi2;
  }
  return acc;
}

// Lanczos approximation of log Gamma (g = 607/128, 15 terms); good to a few
// ulp for x >= 0.5.
inline double lanczos_log_gamma(double x) {
  static constexpr double kG = 607.0 / 128.0;
  static constexpr std::array<double, 15> kC = {
      0.99999999999999709182,     57.156235665862923517,
      -59.597960355475491248,     14.136097974741747174,
      -0.49191381609762019978,    0.33994649984811888699e-4,
      0.46523628927048575665e-4,  -0.98374475304879564677e-4,
      0.15808870322491248884e-3,  -0.21026444172410488319e-3,
      0.21743961811521264320e-3,  -0.16431810653676389022e-3,
      0.84418223983852743293e-4,  -0.26190838401581408670e-4,
      0.36899182659531622704e-5};
  double series = kC[0];
  for (size_t k = 1; k < kC.size(); ++k)
    series += kC[k] / (x - 1.0 + static_cast<double>(k));
  const double t = x + kG - 0.5;
  return 0.5 * std::log(2.0 * kPi) + std::log(series) +
         (x - 0.5) * std::log(t) - t;
}

}  // namespace detail

/// Exact even zeta value as a rational multiple of pi^{2m}:
/// zeta(2m) = (-1)^{m+1} (2 pi)^{2m} B_{2m} / (2 (2m)!).
inline PiExpr zeta_even_exact(int two_m) {
  if (two_m < 2 || two_m % 2 != 0)
    throw std::invalid_argument("zeta_even_exact: argument must be even and >= 2");
  const unsigned m = static_cast<unsigned>(two_m) / 2;
  Rational c = Rational(Integer(1) << (2 * m - 1)) * bernoulli_number(2 * m) /
               Rational(factorial(2 * m));
  if (m % 2 == 0) c = -c;
  return PiExpr::pi_power(m, c);
}

/// Hurwitz zeta(s, q) for q in (0, 1], s != 1, s >= -5, by Euler-Maclaurin
/// with a shift of 12 and 8 correction terms.
inline double hurwitz_zeta_numeric(double s, double q,
                                   const NumericConfig& cfg = {}) {
  cfg.validate();
  if (!(q > 0.0 && q <= 1.0))
    throw std::invalid_argument("hurwitz_zeta: q must lie in (0, 1]");
  if (s == 1.0) throw std::domain_error("hurwitz_zeta: pole at s = 1");
  if (s < -5.0)
    throw std::domain_error("hurwitz_zeta: s below supported range [-5, inf)");
  constexpr int kShift = 12;
  constexpr int kCorrections = 8;
  double acc = 0.0;
  for (int k = 0; k < kShift; ++k) acc += std::pow(k + q, -s);
  const double big = kShift + q;
  acc += std::pow(big, 1.0 - s) / (s - 1.0);
  acc += 0.5 * std::pow(big, -s);
  double rising = s;  // s (s+1) ... (s+2j-2)
  double npow = std::pow(big, -s - 1.0);
  const double big2 = big * big;
  for (int j = 1; j <= kCorrections; ++j) {
    acc += detail::b2j_over_factorial(j) * rising * npow;
    rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    npow /= big2;
  }
  return acc;
}

/// zeta(n) for integer n >= 2.
inline double zeta_numeric(int n, const NumericConfig& cfg = {}) {
  if (n < 2) throw std::invalid_argument("zeta_numeric: n < 2");
  return hurwitz_zeta_numeric(static_cast<double>(n), 1.0, cfg);
}

/// Li_n(x) for integer n >= 2 and x <= 0. Arguments in [-1, 0] use the
/// defining series; x < -1 is folded back through
/// Li_n(x) = (-1)^{n-1} Li_n(1/x) - S_n(ln(-x)) / n!.
inline double polylog_numeric(int n, double x, const NumericConfig& cfg = {}) {
  cfg.validate();
  if (n < 2) throw std::invalid_argument("polylog_numeric: n < 2");
  if (x > 0.0)
    throw std::domain_error("polylog_numeric: positive arguments unsupported");
  if (x >= -1.0) return detail::polylog_series(n, x, cfg);
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^{n-1}
  return sign * detail::polylog_series(n, 1.0 / x, cfg) -
         detail::inversion_tail_sum(n, std::log(-x)) /
             detail::factorial_double(n);
}

/// Gamma(x) for x > 0.
inline double gamma_numeric(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_numeric: requires x > 0");
  if (x < 0.5) return gamma_numeric(x + 1.0) / x;
  return std::exp(detail::lanczos_log_gamma(x));
}

/// digamma(x) for x > 0: upward recurrence into the asymptotic region, then
/// psi(x) ~ ln x - 1/(2x) - sum_j B_{2j} / (2j x^{2j}).
inline double digamma_numeric(double x) {
  if (!(x > 0.0)) throw std::domain_error("digamma_numeric: requires x > 0");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  double p = inv2;
  double tail = 0.0;
  for (int j = 1; j <= 8; ++j) {
    tail += detail::b2j_double(j) / (2.0 * j) * p;
    p *= inv2;
  }
  return acc + std::log(x) - 0.5 / x - tail;
}

/// d/ds zeta(s, q) at s = 0 by central difference.
inline double hurwitz_zeta_s_derivative_at0(double q,
                                            const NumericConfig& cfg = {}) {
  constexpr double kStep = 1e-5;
  return (hurwitz_zeta_numeric(kStep, q, cfg) -
          hurwitz_zeta_numeric(-kStep, q, cfg)) /
         (2.0 * kStep);
}

/// L(s) = 2^{-2s} (zeta(s, 1/4) - zeta(s, 3/4)); the s = 1 value is pi/4
/// (the Hurwitz poles cancel there).
inline double dirichlet_L_numeric(double s, const NumericConfig& cfg = {}) {
  if (s == 1.0) return detail::kPi / 4.0;
  const double diff = hurwitz_zeta_numeric(s, 0.25, cfg) -
                      hurwitz_zeta_numeric(s, 0.75, cfg);
  return std::pow(2.0, -2.0 * s) * diff;
}

}  // namespace logint

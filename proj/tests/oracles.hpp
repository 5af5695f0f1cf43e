#pragma once

// Test-only oracles, kept independent of the library's computation paths:
// Pascal's triangle for binomials, the double-sum (Worpitzky) formula for
// Bernoulli numbers, bracketed partial sums for zeta, and a direct series
// for polylogarithms at positive arguments.

#include "logint/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <vector>

namespace oracles {

using logint::Integer;
using logint::Rational;

// C(n, k) by Pascal's recurrence only.
inline Integer pascal_binomial(unsigned n, unsigned k) {
  std::vector<Integer> row{Integer(1)};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Integer> next(i + 1, Integer(1));
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row.at(k);
}

// B_m = sum_{k=0}^{m} 1/(k+1) sum_{v=0}^{k} (-1)^v C(k,v) v^m, with 0^0 = 1.
// Shares nothing with the generating-function recurrence used by the library.
inline Rational worpitzky_bernoulli(unsigned m) {
  Rational total(0);
  for (unsigned k = 0; k <= m; ++k) {
    Integer inner(0);
    for (unsigned v = 0; v <= k; ++v) {
      Integer p = (v == 0) ? Integer(m == 0 ? 1 : 0)
                           : boost::multiprecision::pow(Integer(v), m);
      Integer term = pascal_binomial(k, v) * p;
      if (v % 2 == 1) term = -term;
      inner += term;
    }
    total += Rational(inner) / Rational(k + 1);
  }
  return total;
}

struct Bracketed {
  double value;
  double halfwidth;
};

// zeta(n) as a Kahan partial sum plus the midpoint of the integral bracket
// int_{K+1}^inf <= tail <= int_K^inf.
inline Bracketed zeta_series(int n, long terms) {
  double sum = 0.0, comp = 0.0;
  for (long k = terms; k >= 1; --k) {
    const double term = std::pow(static_cast<double>(k), -n);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const double upper = std::pow(static_cast<double>(terms), 1.0 - n) / (n - 1.0);
  const double lower =
      std::pow(static_cast<double>(terms) + 1.0, 1.0 - n) / (n - 1.0);
  return {sum + 0.5 * (upper + lower), 0.5 * (upper - lower) + 1e-15 * sum};
}

// Li_n(x) for 0 < x < 1 by the defining series; test-suite extension of the
// library's x <= 0 domain.
inline double polylog_series_pos(int n, double x) {
  double sum = 0.0, xk = 1.0;
  for (long k = 1; k <= 10000000; ++k) {
    xk *= x;
    double kp = 1.0;
    for (int i = 0; i < n; ++i) kp *= static_cast<double>(k);
    const double term = xk / kp;
    sum += term;
    if (term <= 1e-17 * sum) break;
  }
  return sum;
}

// Euler's constant from the harmonic-sum expansion
// H_K - ln K - 1/(2K) + 1/(12K^2) with K = 10^6.
inline double euler_gamma() {
  const long K = 1000000;
  double sum = 0.0, comp = 0.0;
  for (long k = K; k >= 1; --k) {
    const double y = 1.0 / static_cast<double>(k) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const double kd = static_cast<double>(K);
  return sum - std::log(kd) - 0.5 / kd + 1.0 / (12.0 * kd * kd);
}

// Small random rationals for exact-identity property tests.
inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 20);
  return Rational(num(rng), den(rng));
}

}  // namespace oracles

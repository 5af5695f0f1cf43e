#pragma once

// Exact Bernoulli numbers and polynomials. B_m follows the B_1 = -1/2
// convention, i.e. B_m = B_m(0) for the polynomials generated by
// t e^{xt} / (e^t - 1).

#include "logint/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace logint {

/// Exact binomial coefficient; requires k <= n.
inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("binomial: k > n");
  if (k > n - k) k = n - k;
  Integer result(1);
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact at every step
  }
  return result;
}

/// Growable table of Bernoulli numbers, filled from the recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0 with B_0 = 1.
class BernoulliCache {
 public:
  const Rational& number(unsigned m) {
    if (memo_.empty()) memo_.emplace_back(1);
    while (memo_.size() <= m) {
      const unsigned next = static_cast<unsigned>(memo_.size());
      Rational acc(0);
      for (unsigned j = 0; j < next; ++j)
        acc += Rational(binomial(next + 1, j)) * memo_[j];
      memo_.push_back(-acc / Rational(next + 1));
    }
    return memo_[m];
  }

 private:
  std::vector<Rational> memo_;
};

/// B_m from a process-wide cache; safe for concurrent use.
inline Rational bernoulli_number(unsigned m) {
  static BernoulliCache cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  return cache.number(m);
}

/// Coefficients of B_n(x) by ascending power of x (length n+1):
/// B_n(x) = sum_j C(n, j) B_j x^{n-j}.
inline std::vector<Rational> bernoulli_polynomial(unsigned n) {
  std::vector<Rational> coeffs(n + 1);
  for (unsigned j = 0; j <= n; ++j)
    coeffs[n - j] = Rational(binomial(n, j)) * bernoulli_number(j);
  return coeffs;
}

/// B_n(1/2): zero for odd n, (2^{1-n} - 1) B_n for even n.
inline Rational bernoulli_at_half(unsigned n) {
  if (n == 0) return Rational(1);
  if (n % 2 == 1) return Rational(0);
  const Rational two_pow = make_rational(Integer(1), Integer(1) << (n - 1));
  return (two_pow - 1) * bernoulli_number(n);
}

/// Horner evaluation of an ascending coefficient list at a rational point.
inline Rational evaluate_poly(const std::vector<Rational>& coeffs,
                              const Rational& x) {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace logint

#pragma once

// Double-exponential quadrature used as the independent numerical oracle.
// Depends only on the config header; the integrals are computed straight
// from their defining integrands, with no use of the closed-form or
// polylogarithm routes.

#include "logint/numeric_config.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace logint {

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;  // absolute
  int levels_used = 0;
};

class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& msg, QuadResult best)
      : std::runtime_error(msg), best_(best) {}
  const QuadResult& best() const { return best_; }

 private:
  QuadResult best_;
};

namespace detail {

// Abscissa/weight pair produced by a variable transform at trapezoid node t.
struct Node {
  double x;
  double w;
};

// tanh-sinh map for a finite interval [lo, hi]: x = lo + (hi-lo) sigma(2z)
// with z = (pi/2) sinh t. The distance to the nearer endpoint is computed
// directly so endpoint singularities see accurate abscissas.
struct TanhSinhMap {
  double lo, hi;
  static constexpr double tmax = 6.1;
  Node operator()(double t) const {
    constexpr double kHalfPi = 1.5707963267948966;
    const double z = kHalfPi * std::sinh(t);
    const double ez = std::exp(-2.0 * std::fabs(z));
    const double delta = (hi - lo) * ez / (1.0 + ez);  // distance to endpoint
    const double x = (z >= 0.0) ? hi - delta : lo + delta;
    // dx/dt = (hi-lo) (pi/2) cosh t sech^2(z) / 2; sech^2 via the same ez
    const double sech2 = 4.0 * ez / ((1.0 + ez) * (1.0 + ez));
    const double w = 0.5 * (hi - lo) * kHalfPi * std::cosh(t) * sech2;
    return {x, w};
  }
};

// exp-sinh map for [lo, inf): x = lo + e^z, z = (pi/2) sinh t.
struct ExpSinhMap {
  double lo;
  static constexpr double tmax = 6.79;
  Node operator()(double t) const {
    constexpr double kHalfPi = 1.5707963267948966;
    const double z = kHalfPi * std::sinh(t);
    const double ez = std::exp(z);
    return {lo + ez, kHalfPi * std::cosh(t) * ez};
  }
};

// Trapezoid refinement over t with step halving; nodes at j*h are exact
// binary multiples so the grid is reproducible bit for bit.
template <class Map, class F>
QuadResult de_integrate(const Map& map, F&& f, double eps, int max_level) {
  constexpr double kTinyWeight = 1e-290;
  double sum = 0.0;   // running point sum at the current spacing
  double asum = 0.0;  // same, of absolute contributions
  auto accumulate = [&](double t) {
    const Node node = map(t);
    if (!(node.w > kTinyWeight)) return;  // tail truncated by weight decay
    const double c = node.w * f(node.x);
    if (std::isfinite(c)) {
      sum += c;
      asum += std::fabs(c);
    }
  };

  double h = 1.0;
  accumulate(0.0);
  for (long j = 1; static_cast<double>(j) * h <= Map::tmax; ++j) {
    accumulate(static_cast<double>(j) * h);
    accumulate(-static_cast<double>(j) * h);
  }
  double prev = sum * h;
  double estimate = prev;
  double diff = std::numeric_limits<double>::infinity();

  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    for (long j = 1; static_cast<double>(j) * h <= Map::tmax; j += 2) {
      accumulate(static_cast<double>(j) * h);
      accumulate(-static_cast<double>(j) * h);
    }
    estimate = sum * h;
    diff = std::fabs(estimate - prev);
    const double floor =
        16.0 * std::numeric_limits<double>::epsilon() * (asum * h + std::fabs(estimate));
    if ((diff <= eps * std::fabs(estimate) && level >= 2) || diff == 0.0)
      return {estimate, std::max(diff, floor), level};
    prev = estimate;
  }
  throw convergence_error(
      "quadrature failed to converge after " + std::to_string(max_level) +
          " refinement levels",
      QuadResult{estimate, diff, max_level});
}

inline double pow_int(double x, int e) {
  double acc = 1.0;
  for (int i = 0; i < e; ++i) acc *= x;
  return acc;
}

// ln^{n-1}(x) / (x - 1) with a series guard near the removable point x = 1:
// ln x / (x-1) = 1 - d/2 + d^2/3 - d^3/4 + d^4/5 + O(d^5), d = x - 1.
inline double logpow_over_xm1(int n, double x) {
  const double d = x - 1.0;
  if (std::fabs(d) < 1e-4) {
    const double r =
        1.0 + d * (-0.5 + d * (1.0 / 3.0 + d * (-0.25 + d * 0.2)));
    return pow_int(d * r, n - 2) * r;
  }
  return pow_int(std::log(x), n - 1) / d;
}

// t^{n-1} / ((1 - e^{-t})(a + e^t)) with the matching guard at t = 0,
// where t/(1 - e^{-t}) = 1 + t/2 + t^2/12 + O(t^4).
inline double realline_integrand(int n, double a, double t) {
  double core;
  if (std::fabs(t) < 1e-4)
    core = 1.0 + t * (0.5 + t * (1.0 / 12.0));
  else
    core = t / (1.0 - std::exp(-t));
  return pow_int(t, n - 2) * core / (a + std::exp(t));
}

}  // namespace detail

/// Integrate f over [lo, hi] (hi may be +infinity) with tanh-sinh /
/// exp-sinh refinement. Stops once successive levels differ by less than
/// eps relatively; throws convergence_error with the best estimate if the
/// level cap is exhausted.
template <class F>
QuadResult tanh_sinh(F&& f, double lo, double hi, double eps,
                     int max_level = 12) {
  if (std::isinf(lo) || std::isnan(lo) || std::isnan(hi) || !(lo < hi))
    throw std::invalid_argument("tanh_sinh: need finite lo < hi (hi may be +inf)");
  if (!(eps > 0.0)) throw std::invalid_argument("tanh_sinh: eps must be > 0");
  if (std::isinf(hi))
    return detail::de_integrate(detail::ExpSinhMap{lo}, std::forward<F>(f),
                                eps, max_level);
  return detail::de_integrate(detail::TanhSinhMap{lo, hi}, std::forward<F>(f),
                              eps, max_level);
}

/// f_n(a) integrated from its definition, folded onto [0, 1]:
/// integrand ln^{n-1}x [ 1/((x-1)(x+a)) + (-1)^n / ((x-1)(1+ax)) ].
inline QuadResult integrate_f(int n, double a, const NumericConfig& cfg = {}) {
  cfg.validate();
  if (n < 2) throw std::invalid_argument("integrate_f: n < 2");
  if (!(a > 0.0)) throw std::invalid_argument("integrate_f: a must be > 0");
  const double s = (n % 2 == 0) ? 1.0 : -1.0;
  auto integrand = [n, a, s](double x) {
    return detail::logpow_over_xm1(n, x) * (1.0 / (x + a) + s / (1.0 + a * x));
  };
  return tanh_sinh(integrand, 0.0, 1.0, cfg.quad_eps, cfg.quad_max_level);
}

/// The real-line form: integral over (-inf, inf) of
/// t^{n-1} / ((1 - e^{-t})(a + e^t)), computed as two [0, inf) halves.
inline QuadResult integrate_realline(int n, double a,
                                     const NumericConfig& cfg = {}) {
  cfg.validate();
  if (n < 2) throw std::invalid_argument("integrate_realline: n < 2");
  if (!(a > 0.0)) throw std::invalid_argument("integrate_realline: a must be > 0");
  auto pos = [n, a](double t) { return detail::realline_integrand(n, a, t); };
  auto neg = [n, a](double t) { return detail::realline_integrand(n, a, -t); };
  const QuadResult r1 =
      tanh_sinh(pos, 0.0, std::numeric_limits<double>::infinity(),
                cfg.quad_eps, cfg.quad_max_level);
  const QuadResult r2 =
      tanh_sinh(neg, 0.0, std::numeric_limits<double>::infinity(),
                cfg.quad_eps, cfg.quad_max_level);
  return {r1.value + r2.value, r1.err_estimate + r2.err_estimate,
          std::max(r1.levels_used, r2.levels_used)};
}

/// Table entry 4.229.4 after v = -ln x: integral over [0, inf) of
/// ln v * v^{mu-1} e^{-v}; equals psi(mu) Gamma(mu).
inline QuadResult integrate_gr_4_229_4(double mu,
                                       const NumericConfig& cfg = {}) {
  cfg.validate();
  if (!(mu > 0.0))
    throw std::invalid_argument("integrate_gr_4_229_4: mu must be > 0");
  auto integrand = [mu](double v) {
    const double lv = std::log(v);
    const double logmag = (mu - 1.0) * lv - v;
    if (logmag < -745.0) return 0.0;
    return lv * std::exp(logmag);
  };
  return tanh_sinh(integrand, 0.0, std::numeric_limits<double>::infinity(),
                   cfg.quad_eps, cfg.quad_max_level);
}

/// Table entry 4.229.7 after u = ln tan x: integral over [0, inf) of
/// ln u / (2 cosh u); equals (pi/2) ln( sqrt(2 pi) Gamma(3/4) / Gamma(1/4) ).
inline QuadResult integrate_gr_4_229_7(const NumericConfig& cfg = {}) {
  cfg.validate();
  auto integrand = [](double u) { return std::log(u) / (2.0 * std::cosh(u)); };
  return tanh_sinh(integrand, 0.0, std::numeric_limits<double>::infinity(),
                   cfg.quad_eps, cfg.quad_max_level);
}

}  // namespace logint

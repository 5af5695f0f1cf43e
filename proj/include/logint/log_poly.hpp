#pragma once

// Polynomials in b = ln a with PiExpr coefficients, stored densely by
// ascending power of b. Degrees stay small (n <= 64 in the CLI).

#include "logint/pi_expr.hpp"

#include <utility>
#include <vector>

namespace logint {

class LogPoly {
 public:
  LogPoly() = default;

  explicit LogPoly(std::vector<PiExpr> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  // c * b^m
  static LogPoly term(unsigned m, PiExpr c) {
    LogPoly p;
    if (!c.is_zero()) {
      p.c_.resize(m + 1);
      p.c_[m] = std::move(c);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }

  // Degree in b; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const PiExpr& coeff(unsigned m) const {
    static const PiExpr zero;
    return m < c_.size() ? c_[m] : zero;
  }

  const std::vector<PiExpr>& coeffs() const { return c_; }

  // Horner evaluation at b; exact coefficients become doubles at the end.
  double eval(double b, double pi_value) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * b + it->eval(pi_value);
    return acc;
  }

  LogPoly& operator+=(const LogPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  LogPoly& operator-=(const LogPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  LogPoly& operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  LogPoly& operator*=(const PiExpr& s) {
    for (auto& c : c_) c = c * s;
    trim();
    return *this;
  }

  friend LogPoly operator+(LogPoly a, const LogPoly& b) { return a += b; }
  friend LogPoly operator-(LogPoly a, const LogPoly& b) { return a -= b; }

  friend LogPoly operator*(const LogPoly& a, const LogPoly& b) {
    if (a.is_zero() || b.is_zero()) return LogPoly();
    LogPoly r;
    r.c_.resize(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }

  friend LogPoly operator*(LogPoly a, const Rational& s) { return a *= s; }
  friend LogPoly operator*(const Rational& s, LogPoly a) { return a *= s; }
  friend LogPoly operator*(LogPoly a, const PiExpr& s) { return a *= s; }

  friend LogPoly operator/(LogPoly a, const Rational& s) {
    return a *= (Rational(1) / s);
  }

  friend bool operator==(const LogPoly& a, const LogPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const LogPoly& a, const LogPoly& b) {
    return !(a == b);
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<PiExpr> c_;  // c_[m] multiplies b^m; trailing entry nonzero
};

}  // namespace logint

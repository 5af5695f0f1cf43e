#pragma once

// The constant ring Q[pi^2]: finite sums of rational multiples of even pi
// powers. Every constant produced by the closed form carries an even pi
// power; odd powers are unrepresentable here.

#include "logint/rational.hpp"

#include <cmath>
#include <map>

namespace logint {

class PiExpr {
 public:
  PiExpr() = default;

  // Rational constant (pi^0 term).
  PiExpr(const Rational& c) {  // NOLINT: implicit by design
    if (c != 0) coeffs_[0] = c;
  }

  // c * pi^{2k}
  static PiExpr pi_power(unsigned k, const Rational& c = Rational(1)) {
    PiExpr e;
    if (c != 0) e.coeffs_[k] = c;
    return e;
  }

  bool is_zero() const { return coeffs_.empty(); }

  // Degree in pi^2; -1 for the zero element.
  int degree() const {
    return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.rbegin()->first);
  }

  Rational coeff(unsigned k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  // k -> coefficient of pi^{2k}; no zero entries stored.
  const std::map<unsigned, Rational>& terms() const { return coeffs_; }

  // Horner evaluation in pi^2; coefficients rounded to double at the end.
  double eval(double pi_value) const {
    if (coeffs_.empty()) return 0.0;
    const double pi2 = pi_value * pi_value;
    double acc = 0.0;
    int next = degree();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      for (; next > static_cast<int>(it->first); --next) acc *= pi2;
      acc += to_double(it->second);
    }
    for (; next > 0; --next) acc *= pi2;
    return acc;
  }

  PiExpr& operator+=(const PiExpr& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k, c);
    return *this;
  }

  PiExpr& operator-=(const PiExpr& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k, -c);
    return *this;
  }

  PiExpr& operator*=(const Rational& c) {
    if (c == 0) {
      coeffs_.clear();
    } else {
      for (auto& [k, v] : coeffs_) v *= c;
    }
    return *this;
  }

  friend PiExpr operator+(PiExpr a, const PiExpr& b) { return a += b; }
  friend PiExpr operator-(PiExpr a, const PiExpr& b) { return a -= b; }
  friend PiExpr operator-(const PiExpr& a) {
    PiExpr r;
    for (const auto& [k, c] : a.coeffs_) r.coeffs_[k] = -c;
    return r;
  }

  friend PiExpr operator*(const PiExpr& a, const PiExpr& b) {
    PiExpr r;
    for (const auto& [ka, ca] : a.coeffs_)
      for (const auto& [kb, cb] : b.coeffs_) r.add_term(ka + kb, ca * cb);
    return r;
  }

  friend PiExpr operator*(PiExpr a, const Rational& c) { return a *= c; }
  friend PiExpr operator*(const Rational& c, PiExpr a) { return a *= c; }

  friend bool operator==(const PiExpr& a, const PiExpr& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const PiExpr& a, const PiExpr& b) { return !(a == b); }

 private:
  void add_term(unsigned k, const Rational& c) {
    if (c == 0) return;
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
      coeffs_[k] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  std::map<unsigned, Rational> coeffs_;
};

}  // namespace logint

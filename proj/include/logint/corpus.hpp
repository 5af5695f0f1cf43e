#pragma once

// The verification corpus: the Gradshteyn-Ryzhik table entries covered by
// the closed form. Closed-form entries carry the table's factored
// expressions expanded by plain polynomial multiplication, independent of
// the half-shift-sum construction behind normalized_poly.

#include "logint/closed_form.hpp"

#include <string>
#include <vector>

namespace logint {

enum class GrKind { closed_form_fn, realline_fn, loglog_power, loglog_tan };

struct GrEntry {
  std::string id;
  GrKind kind;
  int n = 0;           // integral family index; 0 when not applicable
  LogPoly expected_h;  // populated for closed_form_fn entries
  std::string reference;  // expected value, human readable
  std::string notes;
};

inline const std::vector<GrEntry>& corpus() {
  static const std::vector<GrEntry> entries = [] {
    const LogPoly b = LogPoly::term(1, PiExpr(Rational(1)));
    const LogPoly pi2 = LogPoly::term(0, PiExpr::pi_power(1));
    const LogPoly q = b * b + pi2;  // b^2 + pi^2

    std::vector<GrEntry> v;
    v.push_back({"4.232.3", GrKind::closed_form_fn, 2, q / Rational(2),
                 "(pi^2 + ln^2 a) / (2 (1+a))", ""});
    v.push_back({"4.261.4", GrKind::closed_form_fn, 3, b * q / Rational(3),
                 "ln a (pi^2 + ln^2 a) / (3 (1+a))", ""});
    v.push_back({"4.262.3", GrKind::closed_form_fn, 4, q * q / Rational(4),
                 "(pi^2 + ln^2 a)^2 / (4 (1+a))", ""});
    v.push_back({"4.263.1", GrKind::closed_form_fn, 5,
                 b * q * (Rational(7) * pi2 + Rational(3) * b * b) / Rational(15),
                 "ln a (pi^2 + ln^2 a)(7 pi^2 + 3 ln^2 a) / (15 (1+a))", ""});
    v.push_back({"4.264.3", GrKind::closed_form_fn, 6,
                 q * q * (Rational(3) * pi2 + b * b) / Rational(6),
                 "(pi^2 + ln^2 a)^2 (3 pi^2 + ln^2 a) / (6 (1+a))", ""});
    for (int n = 2; n <= 5; ++n) {
      GrEntry e{"3.419.n" + std::to_string(n), GrKind::realline_fn, n,
                LogPoly(),
                "integral over the real line of t^{n-1}/((1-e^{-t})(a+e^t)), "
                "equal to f_n(a)",
                "sub-numbering within the 3.419 family is not asserted"};
      if (n == 5)
        e.notes =
            "sub-numbering within the 3.419 family is not asserted; the "
            "latest table edition prints a wrong value for this entry";
      v.push_back(std::move(e));
    }
    v.push_back({"4.229.4", GrKind::loglog_power, 0, LogPoly(),
                 "psi(mu) Gamma(mu)",
                 "table prints the exponent as u; it should read mu"});
    v.push_back({"4.229.7", GrKind::loglog_tan, 0, LogPoly(),
                 "(pi/2) ln( sqrt(2 pi) Gamma(3/4) / Gamma(1/4) )", ""});
    return v;
  }();
  return entries;
}

}  // namespace logint

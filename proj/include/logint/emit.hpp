#pragma once

// Canonical renderings of a ClosedForm: plain text, LaTeX and JSON.
// Terms are emitted by strictly descending power of b; output is
// deterministic. h-normalized forms print as the integer-cleared polynomial
// over n, e.g. "(b^2 + pi^2)/2".

#include "logint/closed_form.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace logint {

enum class EmitFormat { text, latex, json };

namespace detail {

struct EmitTerm {
  unsigned pi_half_power;  // k in pi^{2k}
  unsigned b_power;
  Rational coeff;
};

inline std::vector<EmitTerm> collect_terms(const LogPoly& poly) {
  std::vector<EmitTerm> out;
  for (int m = poly.degree(); m >= 0; --m)
    for (const auto& [k, c] : poly.coeff(static_cast<unsigned>(m)).terms())
      out.push_back({k, static_cast<unsigned>(m), c});
  return out;
}

inline std::string join_pieces(const std::vector<std::string>& pieces,
                               const std::string& sep) {
  std::string s;
  for (const auto& p : pieces) {
    if (p.empty()) continue;
    if (!s.empty()) s += sep;
    s += p;
  }
  return s;
}

inline std::string render_body(const LogPoly& poly, bool latex) {
  const auto terms = collect_terms(poly);
  if (terms.empty()) return "0";
  std::string body;
  for (const auto& t : terms) {
    const bool negative = t.coeff < 0;
    const Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    std::vector<std::string> pieces;
    if (mag != 1 || (t.pi_half_power == 0 && t.b_power == 0)) {
      if (latex && rational_den(mag) != 1)
        pieces.push_back("\\frac{" + rational_num(mag).str() + "}{" +
                         rational_den(mag).str() + "}");
      else
        pieces.push_back(rational_to_string(mag));
    }
    if (t.pi_half_power > 0) {
      const std::string p = std::to_string(2 * t.pi_half_power);
      pieces.push_back(latex ? "\\pi^{" + p + "}" : "pi^" + p);
    }
    if (t.b_power > 0) {
      if (latex)
        pieces.push_back(t.b_power == 1
                             ? "\\ln a"
                             : "\\ln^{" + std::to_string(t.b_power) + "} a");
      else
        pieces.push_back(t.b_power == 1 ? "b"
                                        : "b^" + std::to_string(t.b_power));
    }
    const std::string piece = join_pieces(pieces, latex ? " " : " ");
    if (body.empty())
      body = (negative ? "-" : "") + piece;
    else
      body += (negative ? " - " : " + ") + piece;
  }
  return body;
}

inline nlohmann::json json_integer(const Integer& v) {
  static const Integer kSafe = Integer(1) << 53;
  if (v >= -kSafe && v <= kSafe) return v.convert_to<std::int64_t>();
  return v.str();  // preserve exactness beyond the JS-safe range
}

}  // namespace detail

inline std::string emit(const ClosedForm& form, EmitFormat format) {
  const bool is_h = form.normalization == Normalization::h;
  // h forms print with the division by n kept outside the polynomial.
  const LogPoly shown = is_h ? form.poly * Rational(form.n) : form.poly;
  switch (format) {
    case EmitFormat::text: {
      const std::string body = detail::render_body(shown, false);
      return is_h ? "(" + body + ")/" + std::to_string(form.n) : body;
    }
    case EmitFormat::latex: {
      const std::string body = detail::render_body(shown, true);
      return is_h ? "\\frac{" + body + "}{" + std::to_string(form.n) + "}"
                  : body;
    }
    case EmitFormat::json: {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& t : detail::collect_terms(form.poly))
        terms.push_back({t.pi_half_power, t.b_power,
                         detail::json_integer(rational_num(t.coeff)),
                         detail::json_integer(rational_den(t.coeff))});
      const nlohmann::json j = {{"n", form.n},
                                {"normalization", is_h ? "h" : "P"},
                                {"terms", terms}};
      return j.dump();
    }
  }
  return {};
}

}  // namespace logint

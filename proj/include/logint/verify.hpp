#pragma once

// Verification engine: runs one corpus entry through every applicable
// evaluation route and reports residuals. A sample passes when
// |delta| <= tol * max(|reference|, 1e-3), i.e. relative tolerance with an
// absolute floor of tol/1000 for near-zero references (1e-12 at the default
// 1e-9); residuals are scaled so that residual <= tol is exactly that
// predicate.

#include "logint/corpus.hpp"
#include "logint/quadrature.hpp"
#include "logint/special.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace logint {

struct Sample {
  double param = 0.0;  // a for the f_n entries, mu for 4.229.4, 0 otherwise
  double closed = 0.0;  // reference value (closed form or Gamma expression)
  std::optional<double> polylog;
  double quadrature = 0.0;
  double residual = 0.0;

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct Report {
  std::string entry_id;
  std::optional<bool> exact_match;
  double tolerance = 0.0;
  double max_residual = 0.0;
  std::vector<Sample> samples;
  bool passed = false;

  friend bool operator==(const Report&, const Report&) = default;
};

namespace detail {

inline constexpr double kRefFloor = 1e-3;

inline double scaled_residual(double delta, double reference) {
  return std::fabs(delta) / std::max(std::fabs(reference), kRefFloor);
}

inline const GrEntry& find_entry(const std::string& id) {
  for (const auto& e : corpus())
    if (e.id == id) return e;
  throw std::out_of_range("verify: unknown corpus entry \"" + id + "\"");
}

}  // namespace detail

inline nlohmann::json to_json(const Sample& s) {
  nlohmann::json j = {{"param", s.param},
                      {"closed", s.closed},
                      {"polylog", nullptr},
                      {"quadrature", s.quadrature},
                      {"residual", s.residual}};
  if (s.polylog) j["polylog"] = *s.polylog;
  return j;
}

inline nlohmann::json to_json(const Report& r) {
  nlohmann::json j = {{"entry_id", r.entry_id},
                      {"exact_match", nullptr},
                      {"tolerance", r.tolerance},
                      {"max_residual", r.max_residual},
                      {"samples", nlohmann::json::array()},
                      {"passed", r.passed}};
  if (r.exact_match) j["exact_match"] = *r.exact_match;
  for (const auto& s : r.samples) j["samples"].push_back(to_json(s));
  return j;
}

inline Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.entry_id = j.at("entry_id").get<std::string>();
  if (!j.at("exact_match").is_null())
    r.exact_match = j.at("exact_match").get<bool>();
  r.tolerance = j.at("tolerance").get<double>();
  r.max_residual = j.at("max_residual").get<double>();
  r.passed = j.at("passed").get<bool>();
  for (const auto& js : j.at("samples")) {
    Sample s;
    s.param = js.at("param").get<double>();
    s.closed = js.at("closed").get<double>();
    if (!js.at("polylog").is_null()) s.polylog = js.at("polylog").get<double>();
    s.quadrature = js.at("quadrature").get<double>();
    s.residual = js.at("residual").get<double>();
    r.samples.push_back(s);
  }
  return r;
}

/// Verify a single corpus entry at the given tolerance.
inline Report verify_entry(const std::string& id, double tol,
                           const NumericConfig& cfg = {}) {
  if (!(tol > 0.0)) throw std::invalid_argument("verify_entry: tol must be > 0");
  cfg.validate();
  const GrEntry& entry = detail::find_entry(id);

  Report report;
  report.entry_id = entry.id;
  report.tolerance = tol;

  switch (entry.kind) {
    case GrKind::closed_form_fn: {
      report.exact_match = (h_poly(entry.n).poly == entry.expected_h);
      for (const double a : {0.1, 0.5, 1.0, 2.0, 10.0, 100.0}) {
        Sample s;
        s.param = a;
        s.closed = f_closed_eval(entry.n, a);
        s.polylog = f_polylog_eval(entry.n, a, cfg);
        s.quadrature = integrate_f(entry.n, a, cfg).value;
        s.residual = std::max(
            detail::scaled_residual(s.closed - *s.polylog, s.closed),
            detail::scaled_residual(s.closed - s.quadrature, s.closed));
        report.samples.push_back(s);
      }
      break;
    }
    case GrKind::realline_fn: {
      for (const double a : {0.1, 1.0, 3.0, 50.0}) {
        Sample s;
        s.param = a;
        s.closed = f_closed_eval(entry.n, a);
        s.quadrature = integrate_realline(entry.n, a, cfg).value;
        s.residual =
            detail::scaled_residual(s.closed - s.quadrature, s.closed);
        report.samples.push_back(s);
      }
      break;
    }
    case GrKind::loglog_power: {
      for (const double mu : {0.5, 1.0, 2.0, 5.0}) {
        Sample s;
        s.param = mu;
        s.closed = digamma_numeric(mu) * gamma_numeric(mu);
        s.quadrature = integrate_gr_4_229_4(mu, cfg).value;
        s.residual =
            detail::scaled_residual(s.closed - s.quadrature, s.closed);
        report.samples.push_back(s);
      }
      break;
    }
    case GrKind::loglog_tan: {
      Sample s;
      s.closed = 0.5 * detail::kPi *
                 std::log(std::sqrt(2.0 * detail::kPi) * gamma_numeric(0.75) /
                          gamma_numeric(0.25));
      s.quadrature = integrate_gr_4_229_7(cfg).value;
      s.residual =
          detail::scaled_residual(s.closed - s.quadrature, s.closed);
      report.samples.push_back(s);
      break;
    }
  }

  for (const auto& s : report.samples)
    report.max_residual = std::max(report.max_residual, s.residual);
  report.passed = (!report.exact_match.has_value() || *report.exact_match) &&
                  report.max_residual <= tol;
  return report;
}

/// Verify every corpus entry, in corpus order.
inline std::vector<Report> verify_all(double tol,
                                      const NumericConfig& cfg = {}) {
  std::vector<Report> reports;
  reports.reserve(corpus().size());
  for (const auto& e : corpus()) reports.push_back(verify_entry(e.id, tol, cfg));
  return reports;
}

}  // namespace logint

#pragma once

// Command-line surface. run_cli is stream-parameterized so the whole
// surface is testable in-process; the binary in tools/ is a thin wrapper.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "logint/emit.hpp"
#include "logint/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace logint {

namespace detail {

inline std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string bernoulli_poly_to_string(const std::vector<Rational>& c) {
  std::string body;
  for (int m = static_cast<int>(c.size()) - 1; m >= 0; --m) {
    const Rational& r = c[static_cast<size_t>(m)];
    if (r == 0) continue;
    const bool negative = r < 0;
    const Rational mag = negative ? Rational(-r) : r;
    std::string piece;
    if (mag != 1 || m == 0) piece = rational_to_string(mag);
    if (m > 0) {
      if (!piece.empty()) piece += " ";
      piece += (m == 1) ? "x" : "x^" + std::to_string(m);
    }
    if (body.empty())
      body = (negative ? "-" : "") + piece;
    else
      body += (negative ? " - " : " + ") + piece;
  }
  return body.empty() ? "0" : body;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"exact closed forms, cross-checked numerically, for the "
               "integral family f_n(a) = int_0^inf ln^{n-1}x / ((x-1)(x+a)) dx"};
  app.name("logint");
  app.require_subcommand(1);

  auto* cf = app.add_subcommand(
      "closed-form", "print the exact closed-form polynomial for index n");
  int cf_n = 0;
  std::string cf_norm = "h";
  std::string cf_fmt = "text";
  cf->add_option("n", cf_n, "family index (2..64)")
      ->required()
      ->check(CLI::Range(2, 64));
  cf->add_option("--normalization", cf_norm,
                 "h = (1+a) f_n, P = n (1+a) f_n  [default h]")
      ->check(CLI::IsMember({"h", "P"}));
  cf->add_option("--format", cf_fmt, "text, latex or json  [default text]")
      ->check(CLI::IsMember({"text", "latex", "json"}));

  auto* ev = app.add_subcommand("eval", "evaluate f_n(a) numerically");
  int ev_n = 0;
  double ev_a = 0.0;
  std::string ev_method = "closed";
  ev->add_option("n", ev_n, "family index (2..64)")
      ->required()
      ->check(CLI::Range(2, 64));
  ev->add_option("a", ev_a, "parameter a > 0")
      ->required()
      ->check(CLI::PositiveNumber);
  ev->add_option("--method", ev_method,
                 "closed, polylog or quadrature  [default closed]")
      ->check(CLI::IsMember({"closed", "polylog", "quadrature"}));

  auto* vf = app.add_subcommand("verify",
                                "check corpus entries against every route");
  std::string vf_entry;
  bool vf_all = false;
  double vf_tol = 1e-9;
  bool vf_json = false;
  auto* vf_entry_opt = vf->add_option("--entry", vf_entry, "corpus entry id");
  auto* vf_all_opt = vf->add_flag("--all", vf_all, "verify every entry");
  vf_entry_opt->excludes(vf_all_opt);
  vf->add_option("--tol", vf_tol, "tolerance  [default 1e-9]")
      ->check(CLI::PositiveNumber);
  vf->add_flag("--json", vf_json, "machine-readable report");

  auto* bn = app.add_subcommand("bernoulli",
                                "print exact Bernoulli numbers/polynomials");
  int bn_number = -1;
  int bn_poly = -1;
  auto* bn_number_opt =
      bn->add_option("--number", bn_number, "print B_m")->check(CLI::Range(0, 256));
  auto* bn_poly_opt =
      bn->add_option("--poly", bn_poly, "print B_n(x)")->check(CLI::Range(0, 256));
  bn_number_opt->excludes(bn_poly_opt);

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("logint");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (cf->parsed()) {
      const ClosedForm form =
          (cf_norm == "P") ? normalized_poly(cf_n) : h_poly(cf_n);
      const EmitFormat f = (cf_fmt == "latex")  ? EmitFormat::latex
                           : (cf_fmt == "json") ? EmitFormat::json
                                                : EmitFormat::text;
      out << emit(form, f) << "\n";
      return 0;
    }

    if (ev->parsed()) {
      double value = 0.0;
      if (ev_method == "polylog")
        value = f_polylog_eval(ev_n, ev_a);
      else if (ev_method == "quadrature")
        value = integrate_f(ev_n, ev_a).value;
      else
        value = f_closed_eval(ev_n, ev_a);
      out << detail::fmt12(value) << "\n";
      return 0;
    }

    if (vf->parsed()) {
      if (!vf_all && vf_entry.empty()) {
        err << "verify: pass --all or --entry <id>\n";
        return 2;
      }
      std::vector<Report> reports;
      if (vf_all)
        reports = verify_all(vf_tol);
      else
        reports.push_back(verify_entry(vf_entry, vf_tol));

      bool ok = true;
      for (const auto& r : reports) ok = ok && r.passed;

      if (vf_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        out << arr.dump() << "\n";
      } else {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%-10s %-6s %-18s %-10s %s\n", "entry",
                      "exact", "max_residual", "tol", "status");
        out << buf;
        for (const auto& r : reports) {
          const char* exact = r.exact_match ? (*r.exact_match ? "yes" : "no")
                                            : "-";
          std::snprintf(buf, sizeof buf, "%-10s %-6s %-18s %-10s %s\n",
                        r.entry_id.c_str(), exact,
                        detail::fmt12(r.max_residual).c_str(),
                        detail::fmt12(r.tolerance).c_str(),
                        r.passed ? "PASS" : "FAIL");
          out << buf;
        }
        out << reports.size() << " entries, "
            << (ok ? "all passed" : "FAILURES present") << "\n";
      }
      return ok ? 0 : 1;
    }

    if (bn->parsed()) {
      const bool has_number = bn_number_opt->count() > 0;
      const bool has_poly = bn_poly_opt->count() > 0;
      if (has_number == has_poly) {
        err << "bernoulli: pass exactly one of --number or --poly\n";
        return 2;
      }
      if (has_number)
        out << rational_to_string(
                   bernoulli_number(static_cast<unsigned>(bn_number)))
            << "\n";
      else
        out << detail::bernoulli_poly_to_string(
                   bernoulli_polynomial(static_cast<unsigned>(bn_poly)))
            << "\n";
      return 0;
    }
  } catch (const convergence_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace logint

#pragma once

#include <stdexcept>

namespace logint {

// Knobs shared by the floating-point evaluators. Defaults match the
// documented accuracy contracts; validate() guards hand-built configs.
struct NumericConfig {
  double target_eps = 1e-12;  // relative tolerance for series evaluation
  long max_terms = 1000000;   // series length cap
  double quad_eps = 1e-10;    // quadrature refinement stop
  int quad_max_level = 12;    // quadrature refinement cap

  void validate() const {
    if (!(target_eps > 0.0 && target_eps < 1e-3))
      throw std::invalid_argument("NumericConfig: target_eps out of (0, 1e-3)");
    if (max_terms < 1000)
      throw std::invalid_argument("NumericConfig: max_terms < 1000");
    if (!(quad_eps > 0.0 && quad_eps < 1e-3))
      throw std::invalid_argument("NumericConfig: quad_eps out of (0, 1e-3)");
    if (quad_max_level < 1 || quad_max_level > 15)
      throw std::invalid_argument("NumericConfig: quad_max_level out of [1, 15]");
  }
};

}  // namespace logint

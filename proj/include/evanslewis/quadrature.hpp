#pragma once

#include <functional>

#include "evanslewis/profiles.hpp"
#include "evanslewis/types.hpp"

namespace evanslewis {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 4000;
};

struct IntegralResult {
  double value = 0.0;
  double err_estimate = 0.0;
  int subdivisions_used = 0;
};

// Tolerance not reached; carries the best value and estimate.
struct ConvergenceError : std::runtime_error {
  IntegralResult best;
  explicit ConvergenceError(const std::string& what, IntegralResult b)
      : std::runtime_error(what), best(b) {}
};

// Integral of h(r) dr over the window, via r = e^u (integrand h(e^u) e^u),
// Gauss-Kronrod 7/15 pairs with adaptive bisection on the pair difference.
IntegralResult integrate_log(const std::function<double(double)>& h,
                             SupportWindow window, const QuadratureConfig& cfg = {});

// Integral of g(r)^2 r^w dr over the profile window.
IntegralResult weighted_norm_sq(const RadialProfile& g, int weight_exponent,
                                const QuadratureConfig& cfg = {});

}  // namespace evanslewis

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "evanslewis/quadrature.hpp"

using namespace evanslewis;

TEST_CASE("exponential integral") {
  const SupportWindow w{-40.0, 6.0};
  const IntegralResult r = integrate_log([](double x) { return std::exp(-x); }, w);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.err_estimate <= 1e-9);
}

TEST_CASE("gamma integrals") {
  const SupportWindow w{-40.0, 7.0};
  // r^3 e^{-2r}: Gamma(4)/2^4 = 3/8
  const IntegralResult r =
      integrate_log([](double x) { return x * x * x * std::exp(-2.0 * x); }, w);
  CHECK(r.value == doctest::Approx(0.375).epsilon(1e-10));
}

TEST_CASE("weighted norms of the worked profile") {
  const RadialProfile p = make_polyexp(1.0, 1.0);  // g = r e^{-r}
  // int g^2 r^w dr = Gamma(3 + w)/2^{3 + w}
  CHECK(weighted_norm_sq(p, 0).value == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(weighted_norm_sq(p, -2).value == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(weighted_norm_sq(p, 2).value == doctest::Approx(0.75).epsilon(1e-10));
}

TEST_CASE("log-gaussian norm") {
  // g = exp(-(log r)^2): int g^2 r^{-1} dr = int exp(-2u^2) du = sqrt(pi/2)
  const RadialProfile p = make_gaussian_log(1.0, 0.0);
  const double want = std::sqrt(std::numbers::pi / 2.0);
  CHECK(weighted_norm_sq(p, -1).value == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("tolerance escalation throws with the best value attached") {
  QuadratureConfig tight;
  tight.rel_tol = 1e-15;
  tight.abs_tol = 1e-300;
  tight.max_subdivisions = 2;
  const SupportWindow w{-3.0, 3.0};
  bool thrown = false;
  try {
    integrate_log([](double x) { return std::sin(50.0 * std::log(x)) + 1.5; }, w, tight);
  } catch (const ConvergenceError& e) {
    thrown = true;
    CHECK(std::isfinite(e.best.value));
    CHECK(e.best.err_estimate > 0.0);
    CHECK(std::string(e.what()).size() > 0);
  }
  CHECK(thrown);
}

TEST_CASE("results are deterministic") {
  const SupportWindow w{-30.0, 5.0};
  const auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x); };
  const IntegralResult a = integrate_log(f, w);
  const IntegralResult b = integrate_log(f, w);
  CHECK(a.value == b.value);
  CHECK(a.err_estimate == b.err_estimate);
  CHECK(a.subdivisions_used == b.subdivisions_used);
}

TEST_CASE("window validation") {
  CHECK_THROWS_AS(integrate_log([](double) { return 1.0; }, SupportWindow{2.0, 1.0}),
                  UsageError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "evanslewis/cartesian.hpp"

using namespace evanslewis;

TEST_CASE("solid harmonic table") {
  const Vec3 x(1.0, 2.0, 3.0);
  CHECK(solid_harmonic(0, 0, x) == 1.0);
  CHECK(solid_harmonic(1, 0, x) == 3.0);
  CHECK(solid_harmonic(1, 1, x) == 1.0);
  // 2 z^2 - x^2 - y^2 = 18 - 1 - 4 = 13
  CHECK(solid_harmonic(2, 0, x) == 13.0);
  CHECK(solid_harmonic(2, 1, x) == 3.0);  // x z
  // z (2 z^2 - 3 x^2 - 3 y^2) = 3 (18 - 3 - 12) = 9
  CHECK(solid_harmonic(3, 0, x) == 9.0);
  // x (4 z^2 - x^2 - y^2) = 1 (36 - 1 - 4) = 31
  CHECK(solid_harmonic(3, 1, x) == 31.0);
  CHECK_THROWS_AS(solid_harmonic(4, 0, x), UsageError);
  CHECK_THROWS_AS(solid_harmonic(2, 2, x), UsageError);
}

TEST_CASE("solid harmonics are harmonic polynomials") {
  const FDConfig cfg{1e-2};
  const Vec3 x(0.7, -1.1, 0.4);
  for (int k = 0; k <= 3; ++k) {
    for (int m = 0; m <= (k >= 2 ? 1 : k); ++m) {
      const double lap =
          fd_laplacian([k, m](const Vec3& p) { return solid_harmonic(k, m, p); }, x, cfg);
      CHECK(std::abs(lap) <= 1e-8);
    }
  }
}

TEST_CASE("point evaluation composes profile and harmonic") {
  const RadialProfile g = make_polyexp(1.0, 1.0);
  // on the z axis at r = 2: g(2) * (z/r) = 2 e^{-2} * 1
  CHECK(eval_point(1, 0, g, Vec3(0.0, 0.0, 2.0)) ==
        doctest::Approx(2.0 * std::exp(-2.0)).epsilon(1e-14));
  const Vec3 x(1.0, 2.0, 2.0);
  CHECK(eval_point(2, 1, g, x) ==
        doctest::Approx(eval(g, 3.0) * 2.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("radial stencil on a pure power") {
  const FDConfig cfg{1e-3};
  const auto r_sq = [](const Vec3& p) { return p.squaredNorm(); };
  const Vec3 x(0.3, 1.2, -0.8);
  CHECK(fd_radial_laplacian(r_sq, x, cfg) == doctest::Approx(6.0).epsilon(1e-6));
  CHECK(fd_laplacian(r_sq, x, cfg) == doctest::Approx(6.0).epsilon(1e-6));
}

TEST_CASE("consistency report for the worked mode") {
  const RadialProfile g = make_polyexp(1.0, 1.0);
  const auto pts = default_points(12);
  const ConsistencyReport rep = consistency_report(1, 0, g, pts, FDConfig{1e-3});
  CHECK(rep.rows.size() == 12);
  CHECK(rep.k == 1);
  CHECK(rep.h == 1e-3);
  CHECK(rep.max_rel_err <= 1e-4);
  CHECK(rep.diff_max_rel_err <= 1e-4);
  // halving h divides the max error by about 4 (second-order stencils)
  CHECK(rep.order_ratio >= 3.5);
  CHECK(rep.order_ratio <= 4.5);
  CHECK(rep.diff_order_ratio >= 3.5);
  CHECK(rep.diff_order_ratio <= 4.5);
  for (const auto& row : rep.rows) {
    CHECK(std::abs(row.exact - row.fd) <= 1e-4 * (1.0 + std::abs(row.exact)));
  }
}

TEST_CASE("default points are deterministic and in range") {
  const auto a = default_points(12);
  const auto b = default_points(12);
  REQUIRE(a.size() == 12);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK((a[i] - b[i]).norm() == 0.0);
    const double r = a[i].norm();
    CHECK(r >= 0.5);
    CHECK(r <= 3.0);
  }
  // distinct directions
  CHECK((a[0].normalized() - a[7].normalized()).norm() > 0.1);
  CHECK_THROWS_AS(default_points(0), UsageError);
}

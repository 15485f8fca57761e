#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "evanslewis/profiles.hpp"

using namespace evanslewis;

namespace {

// Independent check of the analytic jet against central differences.
void check_jet_fd(const RadialProfile& p, double r, double eps = 1e-6) {
  const double h = 1e-5 * r;
  const ProfileJet j = profile_jet(p, r);
  const double fd1 = (eval(p, r + h) - eval(p, r - h)) / (2 * h);
  const double fd2 = (deriv1(p, r + h) - deriv1(p, r - h)) / (2 * h);
  const double scale = std::abs(j.g) + std::abs(j.dg) + std::abs(j.ddg) + 1e-12;
  CHECK(std::abs(j.dg - fd1) <= eps * scale);
  CHECK(std::abs(j.ddg - fd2) <= eps * scale);
}

}  // namespace

TEST_CASE("polyexp closed-form values") {
  const RadialProfile p = make_polyexp(1.0, 1.0);  // g = r e^{-r}
  CHECK(eval(p, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  // g' = (1 - r) e^{-r}, g'' = (r - 2) e^{-r}
  CHECK(deriv1(p, 2.0) == doctest::Approx(-std::exp(-2.0)).epsilon(1e-14));
  CHECK(std::abs(deriv2(p, 2.0)) < 1e-15);
  CHECK(deriv2(p, 3.0) == doctest::Approx(std::exp(-3.0)).epsilon(1e-13));
  for (const double r : {0.3, 1.0, 2.5, 7.0}) check_jet_fd(p, r);
}

TEST_CASE("polyexp admissibility and window") {
  CHECK_THROWS_AS(make_polyexp(0.5, 1.0), UsageError);
  CHECK_THROWS_AS(make_polyexp(1.0, 0.0), UsageError);
  const RadialProfile p = make_polyexp(1.0, 1.0);
  // window tails are negligible at the integrand scale
  CHECK(eval(p, p.r_hi) * p.r_hi * p.r_hi < 1e-25);
  CHECK(p.r_lo < 1e-30);
  CHECK(p.r_hi > 50.0);
}

TEST_CASE("gaussian log profile") {
  const RadialProfile p = make_gaussian_log(1.0, 0.5);
  CHECK(eval(p, std::exp(0.5)) == doctest::Approx(1.0).epsilon(1e-14));
  // symmetric in u around c
  const double a = eval(p, std::exp(0.5 + 0.7)), b = eval(p, std::exp(0.5 - 0.7));
  CHECK(a == doctest::Approx(b).epsilon(1e-13));
  for (const double r : {0.4, 1.0, 1.9, 5.0}) check_jet_fd(p, r);
  CHECK_THROWS_AS(make_gaussian_log(0.0, 0.0), UsageError);
}

TEST_CASE("power bump support and plateau value") {
  const RadialProfile p = make_power_bump(2.0, 0.25, 4.5, 1.2, 1.0);
  CHECK(eval(p, 0.2) == 0.0);
  CHECK(eval(p, 0.25) == 0.0);
  CHECK(eval(p, 5.0) == 0.0);
  // on the inner plateau the profile is exactly r^beta
  const double r_mid = 1.2;  // u = 0.182, ramps end at lo + w1 = -0.186, hi - w2 = 0.504
  CHECK(eval(p, r_mid) == doctest::Approx(r_mid * r_mid).epsilon(1e-15));
  for (const double r : {0.4, 0.8, 1.5, 3.9}) check_jet_fd(p, r);
  CHECK_THROWS_AS(make_power_bump(0.0, 2.0, 1.0, 0.1, 0.1), UsageError);
  CHECK_THROWS_AS(make_power_bump(0.0, 1.0, 2.0, 1.0, 1.0), UsageError);  // ramps too wide
}

TEST_CASE("plateau family") {
  const RadialProfile p = plateau_family(5.0);
  CHECK(eval(p, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  // sqrt(r) on the plateau |u| <= L/2
  CHECK(eval(p, std::exp(2.0)) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
  CHECK(eval(p, std::exp(-5.0)) == 0.0);
  CHECK(eval(p, std::exp(5.1)) == 0.0);
  for (const double r : {std::exp(-4.2), 0.5, 1.0, std::exp(3.8)}) check_jet_fd(p, r);
  CHECK_THROWS_AS(plateau_family(1.0), UsageError);
}

TEST_CASE("tabulated spline") {
  const int n = 9;
  Vec u(n), y(n);
  for (int i = 0; i < n; ++i) {
    u[i] = -2.0 + 0.5 * i;
    const double s = u[i] / 2.0;
    y[i] = std::pow(1.0 - s * s, 3);
  }
  const RadialProfile p = make_tabulated(u, y);
  // interpolates the interior nodes
  for (int i = 1; i + 1 < n; ++i)
    CHECK(eval(p, std::exp(u[i])) == doctest::Approx(y[i]).epsilon(1e-12));
  CHECK(eval(p, std::exp(-2.0)) == 0.0);
  CHECK(eval(p, std::exp(2.5)) == 0.0);
  for (const double r : {0.22, 0.7, 1.0, 2.4, 6.0}) check_jet_fd(p, r, 1e-5);

  CHECK_THROWS_AS(make_tabulated(Vec::Zero(3), Vec::Zero(3)), UsageError);
  Vec bad = u;
  bad[3] = bad[2];
  CHECK_THROWS_AS(make_tabulated(bad, y), UsageError);
}

TEST_CASE("dilation shifts the profile") {
  const RadialProfile p = make_polyexp(1.0, 1.0);
  const RadialProfile q = dilate(p, 3.0);
  for (const double r : {0.5, 1.0, 2.0}) {
    CHECK(eval(q, 3.0 * r) == doctest::Approx(eval(p, r)).epsilon(1e-14));
  }
  CHECK(q.r_lo == doctest::Approx(3.0 * p.r_lo));
  CHECK(q.r_hi == doctest::Approx(3.0 * p.r_hi));
  CHECK_THROWS_AS(dilate(p, 0.0), UsageError);
}

TEST_CASE("family names round-trip") {
  for (const Family f : {Family::PowerBump, Family::GaussianLog, Family::PolyExp,
                         Family::Plateau, Family::Tabulated}) {
    CHECK(family_from_name(family_name(f)) == f);
  }
  CHECK_THROWS_AS(family_from_name("nope"), UsageError);
}

TEST_CASE("amplitude scales linearly") {
  const RadialProfile p = make_polyexp(1.5, 2.0, 3.0);
  const RadialProfile q = make_polyexp(1.5, 2.0, 1.0);
  CHECK(eval(p, 0.8) == doctest::Approx(3.0 * eval(q, 0.8)).epsilon(1e-15));
  CHECK(deriv2(p, 0.8) == doctest::Approx(3.0 * deriv2(q, 0.8)).epsilon(1e-15));
}

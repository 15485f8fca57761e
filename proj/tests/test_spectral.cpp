#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "evanslewis/spectral.hpp"

using namespace evanslewis;

namespace {

TestFunction worked() {
  TestFunction f;
  f.components.push_back({1, 0, mu_k(1), make_polyexp(1.0, 1.0)});
  return f;
}

}  // namespace

TEST_CASE("worked example reproduces the rational table") {
  // g = r e^{-r}, k = 1: Gamma-integral oracles
  // (7/4, 3/4, 2, 1, 1/2, 1/4), identity residual 0.
  const NormReport r = norms_report(worked());
  CHECK(r.lap_sq == doctest::Approx(7.0 / 4).epsilon(1e-10));
  CHECK(r.lap_r_sq == doctest::Approx(3.0 / 4).epsilon(1e-10));
  CHECK(r.lap_s_sq == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(r.sph_grad_sq == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.inv_sq == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(r.fstar_term == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(std::abs(r.identity_residual) <= 1e-10);
  CHECK(r.per_mode.size() == 1);
  CHECK(r.per_mode[0].eigenvalue == 2.0);
}

TEST_CASE("slack table on the worked example") {
  const SlackTable s = check_inequalities(norms_report(worked()));
  CHECK(s.radial_slack == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(s.spherical_slack == doctest::Approx(1.75 - 25.0 / 64 * 2).epsilon(1e-9));
  CHECK(s.improved_slack == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(s.weighted_slack == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(s.radial_rellich_slack == doctest::Approx(0.75 - 9.0 / 16 * 0.5).epsilon(1e-9));
  CHECK(s.weights_proven);
  // weights outside the proven region are flagged
  const SlackTable bad = check_inequalities(norms_report(worked()), 1.0, 0.26);
  CHECK_FALSE(bad.weights_proven);
}

TEST_CASE("cross term on the worked example") {
  const CrossTerm x = cross_term(worked());
  CHECK(x.x_value == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(x.x_direct == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(x.lower_bound == doctest::Approx(-1.5).epsilon(1e-9));
  CHECK(x.slack == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("proof ledger boundary cases") {
  const TestFunction f = worked();
  CHECK(std::abs(proof_ledger(f, 0.75).n1) <= 1e-10);
  CHECK(proof_ledger(f, 1.0).n1 == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(std::abs(proof_ledger(f, 39.0 / 64).n2_lower) <= 1e-10);
}

TEST_CASE("additivity across orthogonal modes") {
  TestFunction f2 = worked();
  f2.components.push_back({3, 0, mu_k(3), make_polyexp(2.0, 1.0)});
  const NormReport sum = norms_report(f2);
  TestFunction single;
  single.components.push_back(f2.components[1]);
  const NormReport r1 = norms_report(worked());
  const NormReport r3 = norms_report(single);
  CHECK(sum.lap_sq == doctest::Approx(r1.lap_sq + r3.lap_sq).epsilon(1e-12));
  CHECK(sum.inv_sq == doctest::Approx(r1.inv_sq + r3.inv_sq).epsilon(1e-12));
  CHECK(sum.fstar_term == doctest::Approx(r1.fstar_term + r3.fstar_term).epsilon(1e-12));
  CHECK(std::abs(sum.identity_residual) <= 1e-8 * sum.lap_sq);
}

TEST_CASE("mode evaluators compose the jet") {
  const RadialProfile p = make_polyexp(1.0, 1.0);
  const auto lap = laplacian_mode(2.0, p);
  const auto lap_r = radial_laplacian_mode(p);
  const auto fs = f_star_mode(p);
  const double r = 1.3;
  const ProfileJet j = profile_jet(p, r);
  CHECK(lap_r(r) == doctest::Approx(j.ddg + 2.0 * j.dg / r).epsilon(1e-14));
  CHECK(lap(r) == doctest::Approx(j.ddg + 2.0 * j.dg / r - 2.0 * j.g / (r * r)).epsilon(1e-14));
  CHECK(fs(r) == doctest::Approx(j.dg - j.g / (2.0 * r)).epsilon(1e-14));
}

TEST_CASE("validation rejects malformed functions") {
  TestFunction empty;
  CHECK_THROWS_AS(validate(empty), UsageError);

  TestFunction dup = worked();
  dup.components.push_back({1, 0, mu_k(1), make_polyexp(2.0, 1.0)});
  CHECK_THROWS_AS(validate(dup), UsageError);

  TestFunction bad_m = worked();
  bad_m.components[0].m = 2;
  CHECK_THROWS_AS(validate(bad_m), UsageError);

  TestFunction bad_mu = worked();
  bad_mu.components[0].eigenvalue = 3.0;
  CHECK_THROWS_AS(validate(bad_mu), UsageError);

  TestFunction custom;
  custom.spectrum_kind = SpectrumKind::Custom;
  custom.components.push_back({1, 0, 4.0, make_polyexp(1.0, 1.0)});
  CHECK_NOTHROW(validate(custom));
}

TEST_CASE("quadrature failure is rewrapped with the mode label") {
  QuadratureConfig tight;
  tight.rel_tol = 1e-14;
  tight.abs_tol = 1e-300;
  tight.max_subdivisions = 1;
  const int n = 201;
  Vec u(n), y(n);
  for (int i = 0; i < n; ++i) {
    u[i] = -1.0 + 2.0 * i / (n - 1);
    y[i] = (i % 2 == 0) ? 1.0 : -1.0;
  }
  TestFunction f;
  f.components.push_back({2, 1, mu_k(2), make_tabulated(u, y)});
  try {
    norms_report(f, tight);
    CHECK(false);
  } catch (const ConvergenceError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("k=2") != std::string::npos);
    CHECK(msg.find("m=1") != std::string::npos);
  }
}

TEST_CASE("proof ledger needs the sphere spectrum") {
  TestFunction custom;
  custom.spectrum_kind = SpectrumKind::Custom;
  custom.components.push_back({1, 0, 4.0, make_polyexp(1.0, 1.0)});
  CHECK_THROWS_AS(proof_ledger(custom, 0.75), UsageError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "evanslewis/rayleigh.hpp"

using namespace evanslewis;

TEST_CASE("grid and name validation") {
  CHECK_THROWS_AS(validate(LogGrid{-1.0, 1.0, 8}), UsageError);
  CHECK_THROWS_AS(validate(LogGrid{2.0, -2.0, 100}), UsageError);
  CHECK_NOTHROW(validate(LogGrid{-5.0, 5.0, 201}));

  CHECK(form_kind_from_name("LAP_S").kind == FormKind::LAP_S);
  CHECK(form_kind_name(FormKind::mix(1.0, 0.25)) == "MIX");
  CHECK_THROWS_AS(form_kind_from_name("FOO"), UsageError);
}

TEST_CASE("discrete forms reproduce the worked-example integrals") {
  // x_i = g(e^{u_i}) for g = r e^{-r}; x^T M x converges to the weighted
  // integrals (INV 1/2, LAP_R 3/4, LAP_S 2, LAP 7/4 at lambda = 2).
  const LogGrid grid{-20.0, 20.0, 1601};
  Vec x(grid.interior());
  for (int j = 0; j < grid.interior(); ++j) {
    const double r = std::exp(grid.node(j + 1));
    x[j] = r * std::exp(-r);
  }
  const double inv = x.dot(form_matrix(2.0, grid, FormKind::inv()) * x);
  const double lap_r = x.dot(form_matrix(2.0, grid, FormKind::lap_r()) * x);
  const double lap_s = x.dot(form_matrix(2.0, grid, FormKind::lap_s()) * x);
  const double lap = x.dot(form_matrix(2.0, grid, FormKind::lap()) * x);
  CHECK(inv == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(lap_r == doctest::Approx(0.75).epsilon(1e-3));
  CHECK(lap_s == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(lap == doctest::Approx(1.75).epsilon(1e-3));
}

TEST_CASE("MIX is the advertised combination") {
  const LogGrid grid{-4.0, 4.0, 81};
  const Mat mix = form_matrix(2.0, grid, FormKind::mix(0.7, 0.2));
  const Mat combo = 0.7 * form_matrix(2.0, grid, FormKind::lap_r()) +
                    0.2 * form_matrix(2.0, grid, FormKind::lap_s());
  CHECK((mix - combo).cwiseAbs().maxCoeff() <= 1e-12 * combo.cwiseAbs().maxCoeff());
}

TEST_CASE("radial Rellich quotient rises toward 16/9") {
  const auto rows = convergence_study(0.0, FormKind::inv(), FormKind::lap_r(), {5.0, 10.0, 20.0});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].n == 201);
  CHECK(rows[2].n == 801);
  CHECK(rows[0].theta == doctest::Approx(1.12614696).epsilon(1e-6));
  CHECK(rows[1].theta == doctest::Approx(1.58088376).epsilon(1e-6));
  CHECK(rows[2].theta == doctest::Approx(1.72721249).epsilon(1e-6));
  CHECK(rows[0].theta < rows[1].theta);
  CHECK(rows[1].theta < rows[2].theta);
  CHECK(rows[2].theta <= 16.0 / 9 * 1.001);
}

TEST_CASE("spherical quotient rises toward 64/25") {
  const auto rows = convergence_study(2.0, FormKind::lap_s(), FormKind::lap(), {5.0, 10.0, 20.0});
  CHECK(rows[0].theta == doctest::Approx(1.73281751).epsilon(1e-6));
  CHECK(rows[1].theta == doctest::Approx(2.30611989).epsilon(1e-6));
  CHECK(rows[2].theta == doctest::Approx(2.49400996).epsilon(1e-6));
  CHECK(rows[0].theta < rows[1].theta);
  CHECK(rows[1].theta < rows[2].theta);
  CHECK(rows[2].theta <= 64.0 / 25 * 1.001);
}

TEST_CASE("weighted quotient stays at or below one") {
  const auto rows =
      convergence_study(2.0, FormKind::mix(1.0, 0.25), FormKind::lap(), {5.0, 10.0, 20.0});
  CHECK(rows[0].theta == doctest::Approx(0.99750608).epsilon(1e-6));
  CHECK(rows[1].theta == doctest::Approx(0.99750620).epsilon(1e-6));
  CHECK(rows[2].theta == doctest::Approx(0.99750623).epsilon(1e-6));
  for (const auto& row : rows) CHECK(row.theta <= 1.0);
}

TEST_CASE("study rows match a direct assembly") {
  const auto rows = convergence_study(0.0, FormKind::inv(), FormKind::lap_r(), {5.0});
  const LogGrid grid{-5.0, 5.0, 201};
  const FormMatrices F = assemble_forms(0.0, grid, FormKind::inv(), FormKind::lap_r());
  const EigResult e = max_generalized_eig(F);
  CHECK(rows[0].theta == e.value);
  CHECK(e.residual <= 1e-10);
  CHECK(e.coefficients.cwiseAbs().maxCoeff() == 1.0);
}

TEST_CASE("extremizer profile interpolates the eigenvector") {
  const LogGrid grid{-10.0, 10.0, 401};
  const EigResult e =
      max_generalized_eig(assemble_forms(0.0, grid, FormKind::inv(), FormKind::lap_r()));
  const RadialProfile p = extremizer_profile(e);
  for (int i : {1, 57, 200, 399}) {
    CHECK(eval(p, std::exp(grid.node(i))) ==
          doctest::Approx(e.coefficients[i - 1]).epsilon(1e-10).scale(1.0));
  }
  CHECK(eval(p, std::exp(grid.u_lo)) == 0.0);
  CHECK(eval(p, std::exp(grid.u_hi) * 2.0) == 0.0);
}

TEST_CASE("degenerate denominators are rejected") {
  const LogGrid grid{-4.0, 4.0, 81};
  // LAP_S at lambda = 0 is the zero form
  CHECK_THROWS_AS(assemble_forms(0.0, grid, FormKind::lap(), FormKind::lap_s()), AssemblyError);
  CHECK_THROWS_AS(form_matrix(-1.0, grid, FormKind::lap()), UsageError);
  CHECK_THROWS_AS(
      convergence_study(0.0, FormKind::inv(), FormKind::lap_r(), {5.0, 5.0}), UsageError);
}

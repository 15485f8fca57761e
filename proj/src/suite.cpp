#include "evanslewis/suite.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "evanslewis/cartesian.hpp"
#include "evanslewis/jsonio.hpp"
#include "evanslewis/quadrature.hpp"
#include "evanslewis/rayleigh.hpp"
#include "evanslewis/sharp.hpp"

namespace evanslewis {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

RadialProfile tab_profile() {
  // Endpoint values 0 keep the spline's support-edge kinks harmless:
  // every boundary term in the identity carries a factor of g there.
  const int n = 9;
  Vec u(n), y(n);
  for (int i = 0; i < n; ++i) {
    u[i] = -2.0 + 0.5 * i;
    const double s = u[i] / 2.0;
    const double w = 1.0 - s * s;
    y[i] = w * w * w;
  }
  return make_tabulated(u, y);
}

TestFunction worked_example() {
  TestFunction f;
  f.components.push_back({1, 0, mu_k(1), make_polyexp(1.0, 1.0)});
  return f;
}

}  // namespace

std::vector<TestFunction> identity_corpus() {
  std::vector<TestFunction> fs;
  const auto single = [&fs](int k, RadialProfile p) {
    TestFunction f;
    f.components.push_back({k, 0, mu_k(k), std::move(p)});
    fs.push_back(std::move(f));
  };
  const auto multi = [&fs](std::vector<ModeComponent> cs) {
    TestFunction f;
    f.components = std::move(cs);
    fs.push_back(std::move(f));
  };

  single(0, make_polyexp(1.5, 1.0));
  single(1, make_polyexp(1.0, 1.0));
  single(2, make_polyexp(2.0, 0.5));
  single(3, make_polyexp(2.5, 2.0));
  single(5, make_polyexp(3.0, 1.0));
  single(4, make_gaussian_log(1.0, 0.0));
  single(5, make_gaussian_log(2.0, 0.5));
  single(0, make_gaussian_log(1.5, -0.3));
  single(1, make_power_bump(2.0, std::exp(-2.0), std::exp(2.0), 1.0, 1.0));
  single(2, make_power_bump(0.0, 0.25, 4.5, 1.2, 1.0));
  single(3, make_power_bump(1.0, std::exp(-1.0), std::exp(3.0), 1.5, 1.0));
  single(4, plateau_family(6.0));
  single(5, plateau_family(5.0));
  single(0, plateau_family(8.0));
  single(1, tab_profile());
  single(2, dilate(make_polyexp(1.0, 1.0), 3.0));

  multi({{1, 0, mu_k(1), make_polyexp(1.0, 1.0)}, {3, 0, mu_k(3), make_polyexp(2.0, 1.0)}});
  multi({{0, 0, mu_k(0), make_gaussian_log(1.0, 0.0)},
         {2, 0, mu_k(2), make_power_bump(1.0, std::exp(-2.0), std::exp(2.0), 1.0, 1.0)}});
  multi({{1, 0, mu_k(1), make_polyexp(1.0, 1.0)},
         {1, 1, mu_k(1), make_polyexp(1.5, 2.0)},
         {2, 0, mu_k(2), plateau_family(5.0)}});
  multi({{0, 0, mu_k(0), make_polyexp(2.0, 1.0)},
         {1, 0, mu_k(1), make_gaussian_log(1.0, 0.0)},
         {2, 0, mu_k(2), make_power_bump(1.5, std::exp(-1.5), std::exp(2.5), 1.0, 1.0)},
         {3, 0, mu_k(3), plateau_family(5.0)},
         {4, 0, mu_k(4), make_polyexp(1.25, 0.75)},
         {5, 0, mu_k(5), make_gaussian_log(1.5, 0.2)}});
  multi({{2, 0, mu_k(2), make_polyexp(2.0, 1.0, 2.5)},
         {4, 0, mu_k(4), make_power_bump(0.5, std::exp(-1.0), std::exp(3.0), 0.8, 1.2)}});
  multi({{1, 0, mu_k(1), tab_profile()}, {5, 0, mu_k(5), plateau_family(6.0)}});

  return fs;
}

namespace {

CriterionResult c1_worked_example() {
  CriterionResult c{1, "worked rational example", false, ""};
  const NormReport r = norms_report(worked_example());
  const double want[6] = {7.0 / 4, 3.0 / 4, 2.0, 1.0, 1.0 / 2, 1.0 / 4};
  const double got[6] = {r.lap_sq,      r.lap_r_sq, r.lap_s_sq,
                         r.sph_grad_sq, r.inv_sq,   r.fstar_term};
  double worst = 0.0;
  for (int i = 0; i < 6; ++i)
    worst = std::max(worst, std::abs(got[i] - want[i]) / want[i]);
  const double resid = std::abs(r.identity_residual);
  c.pass = worst <= 1e-9 && resid <= 1e-9;
  c.detail = "max rel err " + fmt(worst) + ", identity residual " + fmt(resid);
  return c;
}

CriterionResult c2_identity_suite() {
  CriterionResult c{2, "identity suite", false, ""};
  const auto corpus = identity_corpus();
  double worst = 0.0;
  for (const TestFunction& f : corpus) {
    const NormReport r = norms_report(f);
    worst = std::max(worst, std::abs(r.identity_residual) / r.lap_sq);
  }
  c.pass = corpus.size() >= 20 && worst <= 1e-8;
  c.detail = "max |residual|/lap_sq " + fmt(worst) + " over " +
             std::to_string(corpus.size()) + " functions";
  return c;
}

CriterionResult c3_sharp_constants() {
  CriterionResult c{3, "sharp constants", false, ""};
  const double global_want = 64.0 / 25.0;
  const SharpConstantResult g = global_spherical_constant(sphere_spectrum(8));
  bool ok = std::abs(g.constant - global_want) <= 1e-10 * global_want && g.attaining_index == 1;

  const ScanResult imp = improved_constant();
  ok = ok && std::abs(imp.value - 0.25) <= 1e-9 && imp.attaining_k == 1 &&
       std::abs(imp.attaining_t) <= 1e-9;

  double worst_region = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double k1 = i * 0.05;
    const double want = (25.0 - 9.0 * k1) / 64.0;
    worst_region = std::max(worst_region, std::abs(region_boundary(k1).value - want));
  }
  ok = ok && worst_region <= 1e-6;

  const double alpha2 = generalized_alpha(2.0);
  ok = ok && std::abs(alpha2 - 39.0 / 64.0) <= 1e-12;

  const TestFunction f = worked_example();
  const double n1_boundary = proof_ledger(f, 3.0 / 4.0).n1;
  const double n2_boundary = proof_ledger(f, 39.0 / 64.0).n2_lower;
  ok = ok && std::abs(n1_boundary) <= 1e-9 && std::abs(n2_boundary) <= 1e-9;

  c.pass = ok;
  c.detail = "global " + fmt(g.constant) + ", improved " + fmt(imp.value) +
             ", region max dev " + fmt(worst_region) + ", n1(3/4) " + fmt(n1_boundary) +
             ", n2(39/64) " + fmt(n2_boundary);
  return c;
}

CriterionResult c4_radial_rellich() {
  CriterionResult c{4, "radial Rellich window", false, ""};
  const double target = 16.0 / 9.0;
  const auto rows =
      convergence_study(0.0, FormKind::inv(), FormKind::lap_r(), {5.0, 10.0, 20.0});
  const bool upward =
      rows[0].theta <= rows[1].theta && rows[1].theta <= rows[2].theta;
  bool capped = true;
  for (const ThetaRow& r : rows) capped = capped && r.theta <= target * (1.0 + 1e-3);
  const bool within2 = rows[2].theta >= 0.98 * target;

  const RadialProfile p = plateau_family(20.0);
  const double inv = weighted_norm_sq(p, -2).value;
  const auto lapr = radial_laplacian_mode(p);
  const double lap_r =
      integrate_log([&lapr](double r) { const double v = lapr(r); return v * v * r * r; },
                    window_of(p))
          .value;
  const double quotient = inv / lap_r;
  const bool plateau_ok = quotient >= 0.98 * target;

  c.pass = upward && capped && within2 && plateau_ok;
  c.detail = "theta(20) " + fmt(rows[2].theta) + " (" + fmt(rows[2].theta / target) +
             " of 16/9), plateau quotient " + fmt(quotient) + " (" +
             fmt(quotient / target) + " of 16/9), monotone " + (upward ? "yes" : "no") +
             ", capped " + (capped ? "yes" : "no");
  return c;
}

CriterionResult c5_cross_validation() {
  CriterionResult c{5, "variational vs Mellin", false, ""};
  const double want = 64.0 / 25.0;
  const auto rows =
      convergence_study(2.0, FormKind::lap_s(), FormKind::lap(), {5.0, 10.0, 20.0});
  const bool in_band = rows[2].theta >= 0.95 * want && rows[2].theta <= want * 1.001;
  const bool nondecreasing =
      rows[0].theta <= rows[1].theta && rows[1].theta <= rows[2].theta;
  c.pass = in_band && nondecreasing;
  c.detail = "theta " + fmt(rows[0].theta) + " -> " + fmt(rows[1].theta) + " -> " +
             fmt(rows[2].theta) + " vs 64/25 = " + fmt(want);
  return c;
}

CriterionResult c6_generalized_spectrum() {
  CriterionResult c{6, "generalized spectrum", false, ""};
  SpectrumSpec custom;
  custom.eigenvalues = {0.0, 4.0, 10.0, 18.0};
  const double want = 256.0 / 169.0;
  const SharpConstantResult r = global_spherical_constant(custom);
  bool ok = std::abs(r.constant - want) <= 1e-10 * want && r.attaining_index == 1;

  const double sphere_want = 64.0 / 25.0;
  const SharpConstantResult s = global_spherical_constant(sphere_spectrum(6));
  ok = ok && std::abs(s.constant - sphere_want) <= 1e-10 * sphere_want;

  bool rejected = false;
  try {
    SpectrumSpec bad;
    bad.eigenvalues = {0.0, 0.75};
    validate(bad);
  } catch (const SingularSpectrumError&) {
    rejected = true;
  }
  ok = ok && rejected;

  c.pass = ok;
  c.detail = "custom constant " + fmt(r.constant) + " vs (16/13)^2 = " + fmt(want) +
             ", k0 index " + std::to_string(r.attaining_index) + ", 3/4 rejected " +
             (rejected ? "yes" : "no");
  return c;
}

CriterionResult c7_cross_term() {
  CriterionResult c{7, "cross-term slack", false, ""};
  double min_slack = std::numeric_limits<double>::infinity();
  for (const TestFunction& f : identity_corpus()) {
    const CrossTerm x = cross_term(f);
    min_slack = std::min(min_slack, x.slack);
  }
  const bool nonneg = min_slack >= -1e-9;

  TestFunction pl;
  pl.components.push_back({1, 0, mu_k(1), plateau_family(20.0)});
  const NormReport rep = norms_report(pl);
  const CrossTerm x = cross_term(pl);
  const double rel = x.slack / rep.lap_sq;
  const bool small = rel < 0.05;
  const bool matches = std::abs(x.slack - 2.0 * rep.fstar_term) <= 1e-8 * rep.lap_sq;
  const bool direct = std::abs(x.x_value - x.x_direct) <= 1e-8 * rep.lap_sq;

  c.pass = nonneg && small && matches && direct;
  c.detail = "min slack " + fmt(min_slack) + ", plateau rel slack " + fmt(rel) +
             ", slack vs 2*fstar dev " + fmt(std::abs(x.slack - 2.0 * rep.fstar_term));
  return c;
}

CriterionResult c8_cartesian_fd() {
  CriterionResult c{8, "cartesian FD", false, ""};
  struct Case {
    int k;
    RadialProfile g;
  };
  const Case cases[] = {{1, make_polyexp(1.0, 1.0)},
                        {2, make_power_bump(2.0, 0.25, 4.5, 1.2, 1.0)},
                        {3, make_power_bump(0.0, 0.25, 4.5, 1.2, 1.0)}};
  const auto pts = default_points(12);
  bool ok = true;
  double worst_err = 0.0;
  std::string ratios;
  for (const Case& cs : cases) {
    const ConsistencyReport rep = consistency_report(cs.k, 0, cs.g, pts, {1e-3});
    ok = ok && rep.max_rel_err <= 1e-4 && rep.diff_max_rel_err <= 1e-4;
    ok = ok && rep.order_ratio >= 3.5 && rep.order_ratio <= 4.5;
    ok = ok && rep.diff_order_ratio >= 3.5 && rep.diff_order_ratio <= 4.5;
    worst_err = std::max({worst_err, rep.max_rel_err, rep.diff_max_rel_err});
    if (!ratios.empty()) ratios += ", ";
    ratios += fmt(rep.order_ratio) + "/" + fmt(rep.diff_order_ratio);
  }
  c.pass = ok;
  c.detail = "max rel err " + fmt(worst_err) + ", order ratios (lap/diff) " + ratios;
  return c;
}

CriterionResult c9_property_battery() {
  CriterionResult c{9, "property battery", false, ""};
  TestFunction base;
  base.components.push_back({1, 0, mu_k(1), make_polyexp(1.0, 1.0)});
  base.components.push_back({2, 0, mu_k(2), make_gaussian_log(1.0, 0.0)});
  const NormReport r0 = norms_report(base);
  const auto quotients = [](const NormReport& r) {
    return std::array<double, 5>{r.lap_r_sq / r.lap_sq, r.lap_s_sq / r.lap_sq,
                                 r.sph_grad_sq / r.lap_sq, r.inv_sq / r.lap_sq,
                                 r.fstar_term / r.lap_sq};
  };
  const auto q0 = quotients(r0);
  double worst_dilation = 0.0;
  for (const double s : {0.5, 3.0}) {
    TestFunction fs = base;
    for (ModeComponent& m : fs.components) m.profile = dilate(m.profile, s);
    const auto qs = quotients(norms_report(fs));
    for (std::size_t i = 0; i < q0.size(); ++i)
      worst_dilation = std::max(worst_dilation, std::abs(qs[i] - q0[i]) / std::abs(q0[i]));
  }
  const bool dilation_ok = worst_dilation <= 1e-8;

  TestFunction fa, fb;
  fa.components.push_back({1, 0, mu_k(1), make_polyexp(1.0, 1.0)});
  fb.components.push_back({3, 0, mu_k(3), plateau_family(5.0)});
  TestFunction fab;
  fab.components = {fa.components[0], fb.components[0]};
  const NormReport ra = norms_report(fa), rb = norms_report(fb), rab = norms_report(fab);
  double worst_add = 0.0;
  const auto add_dev = [&worst_add](double apart, double bpart, double together) {
    worst_add = std::max(worst_add, std::abs(together - (apart + bpart)) /
                                        std::max(1e-300, std::abs(together)));
  };
  add_dev(ra.lap_sq, rb.lap_sq, rab.lap_sq);
  add_dev(ra.lap_r_sq, rb.lap_r_sq, rab.lap_r_sq);
  add_dev(ra.lap_s_sq, rb.lap_s_sq, rab.lap_s_sq);
  add_dev(ra.sph_grad_sq, rb.sph_grad_sq, rab.sph_grad_sq);
  add_dev(ra.inv_sq, rb.inv_sq, rab.inv_sq);
  add_dev(ra.fstar_term, rb.fstar_term, rab.fstar_term);
  const bool additive = worst_add <= 1e-8;

  const std::string d1 = jsonio::dump(jsonio::norm_report_to_json(r0));
  const std::string d2 = jsonio::dump(jsonio::norm_report_to_json(norms_report(base)));
  const bool deterministic = d1 == d2;

  c.pass = dilation_ok && additive && deterministic;
  c.detail = "dilation dev " + fmt(worst_dilation) + ", additivity dev " + fmt(worst_add) +
             ", deterministic " + (deterministic ? "yes" : "no");
  return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  const std::function<CriterionResult()> items[] = {
      c1_worked_example, c2_identity_suite,   c3_sharp_constants,
      c4_radial_rellich, c5_cross_validation, c6_generalized_spectrum,
      c7_cross_term,     c8_cartesian_fd,     c9_property_battery};
  std::vector<CriterionResult> out;
  out.reserve(std::size(items));
  int id = 1;
  for (const auto& item : items) {
    try {
      out.push_back(item());
    } catch (const std::exception& e) {
      out.push_back({id, "criterion", false, std::string("exception: ") + e.what()});
    }
    out.back().id = id++;
  }
  return out;
}

}  // namespace evanslewis

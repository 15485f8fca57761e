#include "evanslewis/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "evanslewis/parallel.hpp"

namespace evanslewis {

void validate(const TestFunction& f) {
  if (f.components.empty()) throw UsageError("test function needs at least one mode");
  std::set<std::pair<int, int>> labels;
  for (const auto& c : f.components) {
    if (!labels.insert({c.k, c.m}).second)
      throw UsageError("duplicate mode label (k=" + std::to_string(c.k) +
                       ", m=" + std::to_string(c.m) + ")");
    if (c.eigenvalue < 0) throw UsageError("negative mode eigenvalue");
    if (f.spectrum_kind == SpectrumKind::Sphere) {
      if (c.k < 0 || std::abs(c.m) > c.k)
        throw UsageError("sphere mode needs k >= 0 and |m| <= k");
      if (c.eigenvalue != mu_k(c.k))
        throw UsageError("sphere mode eigenvalue must equal k(k+1)");
    }
  }
}

std::function<double(double)> laplacian_mode(double eigenvalue, const RadialProfile& g) {
  return [eigenvalue, g](double r) {
    ProfileJet j = profile_jet(g, r);
    return j.ddg + 2.0 * j.dg / r - eigenvalue * j.g / (r * r);
  };
}

std::function<double(double)> radial_laplacian_mode(const RadialProfile& g) {
  return [g](double r) {
    ProfileJet j = profile_jet(g, r);
    return j.ddg + 2.0 * j.dg / r;
  };
}

std::function<double(double)> f_star_mode(const RadialProfile& g) {
  return [g](double r) {
    ProfileJet j = profile_jet(g, r);
    return j.dg - 0.5 * j.g / r;
  };
}

namespace {

ModeQuantities mode_quantities(const ModeComponent& c, const QuadratureConfig& cfg) {
  ModeQuantities q;
  q.k = c.k;
  q.m = c.m;
  q.eigenvalue = c.eigenvalue;
  const double lam = c.eigenvalue;
  const SupportWindow w = window_of(c.profile);
  const RadialProfile& g = c.profile;
  try {
    auto lap = laplacian_mode(lam, g);
    auto lap_r = radial_laplacian_mode(g);
    auto fstar = f_star_mode(g);
    q.lap_sq = integrate_log([&](double r) { const double v = lap(r); return v * v * r * r; }, w, cfg).value;
    q.lap_r_sq = integrate_log([&](double r) { const double v = lap_r(r); return v * v * r * r; }, w, cfg).value;
    q.inv_sq = integrate_log([&](double r) { const double v = eval(g, r); return v * v / (r * r); }, w, cfg).value;
    q.lap_s_sq = lam * lam * q.inv_sq;
    q.sph_grad_sq = lam * q.inv_sq;
    q.fstar_term = lam * integrate_log([&](double r) { const double v = fstar(r); return v * v; }, w, cfg).value;
  } catch (const ConvergenceError& e) {
    throw ConvergenceError("mode (k=" + std::to_string(c.k) + ", m=" + std::to_string(c.m) +
                               "): " + e.what(),
                           e.best);
  }
  return q;
}

std::vector<ModeQuantities> per_mode_table(const TestFunction& f, const QuadratureConfig& cfg) {
  validate(f);
  std::vector<ModeQuantities> table(f.components.size());
  parallel_for(f.components.size(), [&](std::size_t i) {
    table[i] = mode_quantities(f.components[i], cfg);
  });
  std::sort(table.begin(), table.end(), [](const ModeQuantities& a, const ModeQuantities& b) {
    return std::tie(a.k, a.m) < std::tie(b.k, b.m);
  });
  return table;
}

}  // namespace

NormReport norms_report(const TestFunction& f, const QuadratureConfig& cfg) {
  NormReport rep;
  rep.per_mode = per_mode_table(f, cfg);
  for (const auto& q : rep.per_mode) {
    rep.lap_sq += q.lap_sq;
    rep.lap_r_sq += q.lap_r_sq;
    rep.lap_s_sq += q.lap_s_sq;
    rep.sph_grad_sq += q.sph_grad_sq;
    rep.inv_sq += q.inv_sq;
    rep.fstar_term += q.fstar_term;
  }
  rep.identity_residual =
      rep.lap_sq -
      (rep.lap_r_sq + rep.lap_s_sq + 2.0 * kR3 * rep.sph_grad_sq + 2.0 * rep.fstar_term);
  return rep;
}

SlackTable check_inequalities(const NormReport& report, double k1, double k2) {
  SlackTable s;
  s.k1 = k1;
  s.k2 = k2;
  s.radial_slack = report.lap_sq - report.lap_r_sq;
  s.spherical_slack = report.lap_sq - (25.0 / 64.0) * report.lap_s_sq;
  s.improved_slack = report.lap_sq - report.lap_r_sq - 0.25 * report.lap_s_sq;
  s.weighted_slack = report.lap_sq - k1 * report.lap_r_sq - k2 * report.lap_s_sq;
  s.radial_rellich_slack = report.lap_r_sq - (9.0 / 16.0) * report.inv_sq;
  s.weights_proven = k1 >= 0 && k2 >= 0 && 9.0 * k1 + 64.0 * k2 <= 25.0 + 1e-12;
  return s;
}

ProofLedger proof_ledger(const TestFunction& f, double alpha, const QuadratureConfig& cfg) {
  if (f.spectrum_kind != SpectrumKind::Sphere)
    throw UsageError("proof ledger is defined for the sphere spectrum");
  ProofLedger led{alpha, 0.0, 0.0};
  for (const auto& q : per_mode_table(f, cfg)) {
    const double mu = q.eigenvalue;
    const double core = mu * (alpha * mu - 1.5) * q.inv_sq;
    led.n1 += core;
    if (q.k >= 1) led.n2_lower += core + (9.0 / 16.0) * q.inv_sq;
  }
  return led;
}

CrossTerm cross_term(const TestFunction& f, const QuadratureConfig& cfg) {
  NormReport rep = norms_report(f, cfg);
  CrossTerm x;
  x.x_value = rep.lap_sq - rep.lap_r_sq - rep.lap_s_sq;
  x.lower_bound = 0.0;
  x.x_direct = 0.0;
  for (const auto& q : rep.per_mode) x.lower_bound += 2.0 * kR3 * q.eigenvalue * q.inv_sq;
  // Direct route: per mode -2 lambda int (g'' + 2 g'/r) g dr.
  for (const auto& c : f.components) {
    auto lap_r = radial_laplacian_mode(c.profile);
    const double lam = c.eigenvalue;
    if (lam == 0.0) continue;
    x.x_direct += -2.0 * lam *
                  integrate_log([&](double r) { return lap_r(r) * eval(c.profile, r); },
                                window_of(c.profile), cfg)
                      .value;
  }
  x.slack = x.x_value - x.lower_bound;
  return x;
}

}  // namespace evanslewis

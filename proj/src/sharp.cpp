#include "evanslewis/sharp.hpp"

#include <cmath>
#include <functional>

namespace evanslewis {

namespace {
constexpr double kSingularTol = 1e-12;  // distance to 3/4 treated as singular
constexpr double kTMax = 50.0;          // scan window in t
constexpr int kTGrid = 2001;
constexpr int kGoldenIters = 80;
}  // namespace

MellinSymbol symbol(double t) { return {t, 0.75 - t * t, 2.0 * t}; }

double symbol_dist_sq(double t, double lambda) {
  const MellinSymbol a = symbol(t);
  const double re = a.re - lambda;
  return re * re + a.im * a.im;
}

SpectrumSpec sphere_spectrum(int k_max) {
  if (k_max < 0) throw UsageError("sphere spectrum needs k_max >= 0");
  SpectrumSpec s;
  s.eigenvalues.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) s.eigenvalues.push_back(mu_k(k));
  return s;
}

void validate(const SpectrumSpec& spec) {
  if (spec.eigenvalues.empty()) throw UsageError("spectrum is empty");
  if (spec.eigenvalues.front() != 0.0)
    throw UsageError("spectrum must begin with the eigenvalue 0");
  for (std::size_t i = 0; i + 1 < spec.eigenvalues.size(); ++i)
    if (!(spec.eigenvalues[i] < spec.eigenvalues[i + 1]))
      throw UsageError("spectrum eigenvalues must be strictly increasing");
  for (const double lambda : spec.eigenvalues)
    if (std::abs(lambda - 0.75) < kSingularTol)
      throw SingularSpectrumError(
          "spectrum contains 3/4, where the symbol distance degenerates");
}

namespace {

struct TMin {
  double t, value;
};

// Deterministic grid scan over [0, kTMax] plus fixed-iteration golden-section
// refinement of the bracketing interval. If the minimum sits at a grid node
// (t = 0 in every analytic case here) the node value wins exactly.
TMin scan_min(const std::function<double(double)>& f) {
  const double dt = kTMax / (kTGrid - 1);
  double best_t = 0.0, best_v = f(0.0);
  int best_i = 0;
  for (int i = 1; i < kTGrid; ++i) {
    const double t = dt * i;
    const double v = f(t);
    if (v < best_v) {
      best_v = v;
      best_t = t;
      best_i = i;
    }
  }
  double lo = dt * std::max(0, best_i - 1);
  double hi = dt * std::min(kTGrid - 1, best_i + 1);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < kGoldenIters; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = f(x2);
    }
  }
  const double mid = 0.5 * (lo + hi);
  const double vm = f(mid);
  // A sub-eps "improvement" is cancellation noise, not a better minimum:
  // the location of a smooth minimum is only conditioned to sqrt(eps).
  if (vm < best_v - 1e-12 * (std::abs(best_v) + 1e-300)) return {mid, vm};
  return {best_t, best_v};
}

}  // namespace

SharpConstantResult mode_spherical_constant(double lambda) {
  if (!(lambda >= 0.0)) throw UsageError("mode constant needs lambda >= 0");
  if (std::abs(lambda - 0.75) < kSingularTol)
    throw SingularSpectrumError("eigenvalue 3/4 makes the constant singular");
  SharpConstantResult res;
  if (lambda == 0.0) {
    res.constant = 0.0;
    res.method = Method::closed_form;
    return res;
  }
  const TMin m = scan_min([lambda](double t) { return symbol_dist_sq(t, lambda); });
  const double scan_value = lambda * lambda / m.value;
  res.attaining_t = m.t;
  if (lambda > 0.75) {
    const double d = lambda - 0.75;
    res.constant = lambda * lambda / (d * d);
    res.method = Method::closed_form;
    if (std::abs(scan_value - res.constant) > 1e-10 * res.constant)
      throw std::runtime_error("closed form and scan disagree for the mode constant");
  } else {
    res.constant = scan_value;
    res.method = Method::scan;
    res.warning = "eigenvalue below 3/4: closed form inapplicable, scan value reported";
  }
  return res;
}

SharpConstantResult global_spherical_constant(const SpectrumSpec& spec) {
  validate(spec);
  if (spec.eigenvalues.size() < 2)
    throw UsageError("spectrum needs at least one nonzero eigenvalue");
  SharpConstantResult best;
  bool have = false;
  for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
    const double lambda = spec.eigenvalues[i];
    if (lambda == 0.0) continue;
    SharpConstantResult mode = mode_spherical_constant(lambda);
    if (!have || mode.constant > best.constant) {
      best = mode;
      best.attaining_index = static_cast<int>(i);
      have = true;
    }
  }
  return best;
}

double generalized_alpha(double lambda) {
  if (!(lambda > 0.0)) throw UsageError("alpha threshold needs lambda > 0");
  const double d = 1.0 / lambda - 4.0 / 3.0;
  return 1.0 - (9.0 / 16.0) * d * d;
}

namespace {

// Shared kernel: inf over listed eigenvalues and t of
// (|A - mu|^2 - k1 |A|^2) / mu^2. The sphere path may truncate the k sweep
// once the per-mode minima have increased three times in a row (the per-mode
// value is increasing in mu past 3/4).
ScanResult region_scan(double k1, const std::function<double(int)>& eigenvalue, int k_count,
                       bool truncate) {
  ScanResult res{0.0, 0, 0.0, 0};
  bool have = false;
  int rises = 0;
  double prev = 0.0;
  for (int k = 1; k < k_count; ++k) {
    const double mu = eigenvalue(k);
    if (mu == 0.0) continue;
    const TMin m = scan_min([k1, mu](double t) {
      const MellinSymbol a = symbol(t);
      const double abs_sq = a.re * a.re + a.im * a.im;
      const double re = a.re - mu;
      return (re * re + a.im * a.im - k1 * abs_sq) / (mu * mu);
    });
    res.k_checked = k;
    if (!have || m.value < res.value) {
      res.value = m.value;
      res.attaining_k = k;
      res.attaining_t = m.t;
    }
    rises = (have && m.value > prev) ? rises + 1 : 0;
    prev = m.value;
    have = true;
    if (truncate && rises >= 3) break;
  }
  if (!have) throw UsageError("spectrum needs at least one nonzero eigenvalue");
  return res;
}

}  // namespace

ScanResult improved_constant() { return region_boundary(1.0); }

ScanResult region_boundary(double k1) {
  if (!(k1 >= 0.0 && k1 <= 1.0)) throw UsageError("k1 must lie in [0, 1]");
  return region_scan(k1, [](int k) { return mu_k(k); }, 64, true);
}

ScanResult region_boundary(double k1, const SpectrumSpec& spec) {
  if (!(k1 >= 0.0 && k1 <= 1.0)) throw UsageError("k1 must lie in [0, 1]");
  validate(spec);
  const int n = static_cast<int>(spec.eigenvalues.size());
  return region_scan(
      k1, [&spec](int k) { return spec.eigenvalues[static_cast<std::size_t>(k)]; }, n, false);
}

RadialAudit radial_constant_audit() {
  RadialAudit audit{0.0, 1.0, 0.0, false};
  const double dt = kTMax / (kTGrid - 1);
  for (int k = 1; k <= 40; ++k) {
    const double mu = mu_k(k);
    for (int i = 0; i < kTGrid; ++i) {
      const double t = dt * i;
      const MellinSymbol a = symbol(t);
      const double abs_sq = a.re * a.re + a.im * a.im;
      const double ratio = abs_sq / symbol_dist_sq(t, mu);
      audit.grid_max = std::max(audit.grid_max, ratio);
    }
  }
  audit.ratio_k1_t0 = symbol(0.0).re * symbol(0.0).re / symbol_dist_sq(0.0, mu_k(1));
  audit.sup_below_one = audit.grid_max < 1.0;
  return audit;
}

}  // namespace evanslewis

#include "evanslewis/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace evanslewis {

namespace {

// Kronrod 15 abscissae/weights with the embedded 7-point Gauss weights.
constexpr double kXgk[8] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801};
constexpr double kWg[4] = {0.12948496616886969327, 0.27970539148927666790,
                           0.38183005050511894495, 0.41795918367346938776};

struct Panel {
  double a, b;       // u-interval
  double value;      // Kronrod value
  double err;        // |Kronrod - Gauss|
};

struct PanelOrder {
  bool operator()(const Panel& p, const Panel& q) const {
    if (p.err != q.err) return p.err < q.err;  // largest error first
    return p.a > q.a;
  }
};

template <class F>
Panel gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double k = kWgk[7] * f(c);
  double g = kWg[3] * f(c);
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double s = f(c - dx) + f(c + dx);
    k += kWgk[i] * s;
    if (i % 2 == 1) g += kWg[i / 2] * s;
  }
  return {a, b, k * h, std::abs((k - g) * h)};
}

double kahan_sum(std::vector<double>& xs) {
  double s = 0.0, comp = 0.0;
  for (double x : xs) {
    const double y = x - comp;
    const double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return s;
}

}  // namespace

IntegralResult integrate_log(const std::function<double(double)>& h,
                             SupportWindow window, const QuadratureConfig& cfg) {
  if (!(cfg.rel_tol > 0 && cfg.abs_tol > 0 && cfg.max_subdivisions >= 1))
    throw UsageError("invalid quadrature config");
  if (!(window.u_lo < window.u_hi)) throw UsageError("invalid window");

  auto f = [&h](double u) {
    const double r = std::exp(u);
    return h(r) * r;
  };

  // Initial panels no wider than 2 in u so decaying tails register.
  const double width = window.u_hi - window.u_lo;
  const int n0 = std::max(1, (int)std::ceil(width / 2.0));
  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
  double total = 0.0, total_err = 0.0;
  for (int i = 0; i < n0; ++i) {
    Panel p = gk15(f, window.u_lo + width * i / n0, window.u_lo + width * (i + 1) / n0);
    total += p.value;
    total_err += p.err;
    queue.push(p);
  }

  int splits = 0;
  while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)) &&
         splits < cfg.max_subdivisions) {
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    queue.push(left);
    queue.push(right);
    ++splits;
  }

  // Deterministic final sums: order panels by left endpoint.
  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel& p, const Panel& q) { return p.a < q.a; });
  std::vector<double> vals, errs;
  vals.reserve(panels.size());
  errs.reserve(panels.size());
  for (const Panel& p : panels) {
    vals.push_back(p.value);
    errs.push_back(p.err);
  }
  IntegralResult res{kahan_sum(vals), kahan_sum(errs), splits};
  if (res.err_estimate > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(res.value)))
    throw ConvergenceError("quadrature tolerance not reached", res);
  return res;
}

IntegralResult weighted_norm_sq(const RadialProfile& g, int weight_exponent,
                                const QuadratureConfig& cfg) {
  auto h = [&g, weight_exponent](double r) {
    const double v = eval(g, r);
    return v * v * std::pow(r, weight_exponent);
  };
  return integrate_log(h, window_of(g), cfg);
}

}  // namespace evanslewis

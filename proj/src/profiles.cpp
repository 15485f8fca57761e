#include "evanslewis/profiles.hpp"

#include <algorithm>
#include <cmath>

#include "evanslewis/cutoff.hpp"

namespace evanslewis {

const char* family_name(Family f) {
  switch (f) {
    case Family::PowerBump: return "PowerBump";
    case Family::GaussianLog: return "GaussianLog";
    case Family::PolyExp: return "PolyExp";
    case Family::Plateau: return "Plateau";
    case Family::Tabulated: return "Tabulated";
  }
  throw UsageError("unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "PowerBump") return Family::PowerBump;
  if (name == "GaussianLog") return Family::GaussianLog;
  if (name == "PolyExp") return Family::PolyExp;
  if (name == "Plateau") return Family::Plateau;
  if (name == "Tabulated") return Family::Tabulated;
  throw UsageError("unknown profile family: " + name);
}

bool compactly_supported(Family f) {
  return f == Family::PowerBump || f == Family::Plateau || f == Family::Tabulated;
}

namespace {

struct Jet {
  double v, d1, d2;
};

// Chain a log-coordinate jet (value, d/du, d2/du2 at u = log rho) to rho.
Jet from_log_jet(double rho, double v, double du, double duu) {
  return {v, du / rho, (duu - du) / (rho * rho)};
}

Jet core_jet(const PolyExpP<double>& p, double rho) {
  const double pw = std::pow(rho, p.a);
  const double e = std::exp(-p.b * rho);
  const double g = pw * e;
  const double d1 = (p.a / rho - p.b) * g;
  const double d2 = (p.a * (p.a - 1) / (rho * rho) - 2 * p.a * p.b / rho + p.b * p.b) * g;
  return {g, d1, d2};
}

Jet core_jet(const GaussianLogP<double>& p, double rho) {
  const double u = std::log(rho);
  const double t = u - p.c;
  const double g = std::exp(-p.q * t * t);
  const double gu = -2 * p.q * t * g;
  const double guu = (-2 * p.q + 4 * p.q * p.q * t * t) * g;
  return from_log_jet(rho, g, gu, guu);
}

// Two-sided ramp in log coordinates with jet w.r.t. u.
struct BumpJet {
  double b, bu, buu;
};
BumpJet bump_log_jet(const PowerBumpP<double>& p, double u) {
  CutoffJet<double> s1 = smoothstep((u - p.lo) / p.w1);
  CutoffJet<double> s2 = smoothstep((p.hi - u) / p.w2);
  const double a = s1.v, au = s1.d1 / p.w1, auu = s1.d2 / (p.w1 * p.w1);
  const double b = s2.v, bu = -s2.d1 / p.w2, buu = s2.d2 / (p.w2 * p.w2);
  return {a * b, au * b + a * bu, auu * b + 2 * au * bu + a * buu};
}

Jet core_jet(const PowerBumpP<double>& p, double rho) {
  const double u = std::log(rho);
  if (u <= p.lo || u >= p.hi) return {0.0, 0.0, 0.0};
  BumpJet bj = bump_log_jet(p, u);
  // g = rho^beta B(u): express the rho-jet through the u-jet of B.
  const double pw = std::pow(rho, p.beta), beta = p.beta;
  const double g = pw * bj.b;
  const double d1 = pw / rho * (beta * bj.b + bj.bu);
  const double d2 = pw / (rho * rho) *
                    (beta * (beta - 1) * bj.b + (2 * beta - 1) * bj.bu + bj.buu);
  return {g, d1, d2};
}

Jet core_jet(const PlateauP<double>& p, double rho) {
  const double u = std::log(rho);
  if (std::abs(u) >= p.L) return {0.0, 0.0, 0.0};
  CutoffJet<double> c = plateau_cutoff(u / p.L);
  const double cu = c.d1 / p.L, cuu = c.d2 / (p.L * p.L);
  const double s = std::sqrt(rho);
  // g = e^{u/2} chi(u/L): log-jet then chain.
  const double v = s * c.v;
  const double du = s * (0.5 * c.v + cu);
  const double duu = s * (0.25 * c.v + cu + cuu);
  return from_log_jet(rho, v, du, duu);
}

Jet core_jet(const TabulatedP<double>& p, double rho) {
  const double u = std::log(rho);
  const auto n = p.u.size();
  if (u <= p.u[0] || u >= p.u[n - 1]) return {0.0, 0.0, 0.0};
  // locate interval [u_i, u_{i+1})
  const double* begin = p.u.data();
  Eigen::Index i = std::upper_bound(begin, begin + n, u) - begin - 1;
  i = std::clamp<Eigen::Index>(i, 0, n - 2);
  const double h = p.u[i + 1] - p.u[i];
  const double t = u - p.u[i];
  const double m0 = p.m[i], m1 = p.m[i + 1];
  const double b = (p.y[i + 1] - p.y[i]) / h - h * (2 * m0 + m1) / 6.0;
  const double v = p.y[i] + b * t + 0.5 * m0 * t * t + (m1 - m0) / (6.0 * h) * t * t * t;
  const double du = b + m0 * t + 0.5 * (m1 - m0) / h * t * t;
  const double duu = m0 + (m1 - m0) / h * t;
  return from_log_jet(rho, v, du, duu);
}

Jet dispatch_core(const RadialProfile& p, double rho) {
  return std::visit([rho](const auto& fam) { return core_jet(fam, rho); }, p.params);
}

}  // namespace

ProfileJet profile_jet(const RadialProfile& p, double r) {
  if (!(r > 0)) throw std::domain_error("profile evaluated at non-positive radius");
  if (compactly_supported(p.family) && (r <= p.r_lo || r >= p.r_hi))
    return {0.0, 0.0, 0.0};
  const double es = std::exp(-p.shift);
  Jet j = dispatch_core(p, r * es);
  return {p.amp * j.v, p.amp * es * j.d1, p.amp * es * es * j.d2};
}

double eval(const RadialProfile& p, double r) { return profile_jet(p, r).g; }
double deriv1(const RadialProfile& p, double r) { return profile_jet(p, r).dg; }
double deriv2(const RadialProfile& p, double r) { return profile_jet(p, r).ddg; }

RadialProfile make_polyexp(double a, double b, double amp) {
  // a > 1/2 keeps the r^{-2}-weighted norm finite; the margin also keeps
  // the second-derivative scale r^{a-2} representable across the window.
  if (!(a >= 0.75)) throw UsageError("PolyExp exponent a must be >= 0.75");
  if (!(b > 0)) throw UsageError("PolyExp rate b must be positive");
  RadialProfile p;
  p.family = Family::PolyExp;
  p.params = PolyExpP<double>{a, b};
  p.amp = amp;
  // Effective window: weighted integrands decay like e^{(2a-1)u} at the left
  // and e^{-2br} at the right; margins push tails below 1e-30 relative.
  const double u_lo = std::min(0.0, -std::log(b)) - 72.0 / (2 * a - 1);
  double r_hi = (150.0 + 2 * a + 2) / (2 * b);
  for (int it = 0; it < 4; ++it)
    r_hi = (150.0 + (2 * a + 2) * std::max(0.0, std::log(r_hi))) / (2 * b);
  r_hi = std::max(r_hi, std::exp(2.0) * (a + 1) / b);
  p.r_lo = std::exp(u_lo);
  p.r_hi = r_hi;
  return p;
}

RadialProfile make_gaussian_log(double q, double c, double amp) {
  if (!(q > 0)) throw UsageError("GaussianLog width q must be positive");
  RadialProfile p;
  p.family = Family::GaussianLog;
  p.params = GaussianLogP<double>{q, c};
  p.amp = amp;
  // Half-width h with 2q h^2 - 3h - (160 + 3|c|) >= 0.
  const double rhs = 160.0 + 3.0 * std::abs(c);
  const double h = (3.0 + std::sqrt(9.0 + 8.0 * q * rhs)) / (4.0 * q);
  p.r_lo = std::exp(c - h);
  p.r_hi = std::exp(c + h);
  return p;
}

RadialProfile make_power_bump(double beta, double r_lo, double r_hi,
                              double ramp1, double ramp2, double amp) {
  if (!(r_lo > 0 && r_hi > r_lo)) throw UsageError("PowerBump window invalid");
  if (!(ramp1 > 0 && ramp2 > 0)) throw UsageError("PowerBump ramp widths must be positive");
  const double lo = std::log(r_lo), hi = std::log(r_hi);
  if (ramp1 + ramp2 > hi - lo) throw UsageError("PowerBump ramps exceed window");
  RadialProfile p;
  p.family = Family::PowerBump;
  p.params = PowerBumpP<double>{beta, lo, hi, ramp1, ramp2};
  p.amp = amp;
  p.r_lo = r_lo;
  p.r_hi = r_hi;
  return p;
}

RadialProfile plateau_family(double L) {
  if (!(L > 1)) throw UsageError("plateau length L must exceed 1");
  RadialProfile p;
  p.family = Family::Plateau;
  p.params = PlateauP<double>{L};
  p.r_lo = std::exp(-L);
  p.r_hi = std::exp(L);
  return p;
}

RadialProfile make_tabulated(const Vec& u, const Vec& y) {
  const auto n = u.size();
  if (n < 4 || y.size() != n) throw UsageError("tabulated profile needs >= 4 nodes");
  for (Eigen::Index i = 0; i + 1 < n; ++i)
    if (!(u[i] < u[i + 1])) throw UsageError("tabulated nodes must increase");
  // Natural cubic spline: tridiagonal solve for second derivatives.
  Vec m = Vec::Zero(n);
  if (n > 2) {
    const auto k = n - 2;
    Vec diag(k), sub(k), sup(k), rhs(k);
    for (Eigen::Index i = 0; i < k; ++i) {
      const double h0 = u[i + 1] - u[i], h1 = u[i + 2] - u[i + 1];
      diag[i] = (h0 + h1) / 3.0;
      sub[i] = h0 / 6.0;
      sup[i] = h1 / 6.0;
      rhs[i] = (y[i + 2] - y[i + 1]) / h1 - (y[i + 1] - y[i]) / h0;
    }
    for (Eigen::Index i = 1; i < k; ++i) {  // Thomas elimination
      const double w = sub[i] / diag[i - 1];
      diag[i] -= w * sup[i - 1];
      rhs[i] -= w * rhs[i - 1];
    }
    m[k] = rhs[k - 1] / diag[k - 1];
    for (Eigen::Index i = k - 1; i >= 1; --i)
      m[i] = (rhs[i - 1] - sup[i - 1] * m[i + 1]) / diag[i - 1];
  }
  RadialProfile p;
  p.family = Family::Tabulated;
  p.params = TabulatedP<double>{u, y, m};
  p.r_lo = std::exp(u[0]);
  p.r_hi = std::exp(u[n - 1]);
  return p;
}

RadialProfile dilate(const RadialProfile& p, double s) {
  if (!(s > 0)) throw UsageError("dilation factor must be positive");
  RadialProfile q = p;
  q.shift = p.shift + std::log(s);
  q.r_lo = p.r_lo * s;
  q.r_hi = p.r_hi * s;
  return q;
}

SupportWindow window_of(const RadialProfile& p) {
  return {std::log(p.r_lo), std::log(p.r_hi)};
}

}  // namespace evanslewis

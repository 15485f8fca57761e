#include "evanslewis/cartesian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace evanslewis {

double solid_harmonic(int k, int m, const Vec3& x) {
  const double X = x[0], Y = x[1], Z = x[2];
  if (m == 0) {
    switch (k) {
      case 0: return 1.0;
      case 1: return Z;
      case 2: return 2.0 * Z * Z - X * X - Y * Y;
      case 3: return Z * (2.0 * Z * Z - 3.0 * X * X - 3.0 * Y * Y);
    }
  } else if (m == 1) {
    switch (k) {
      case 1: return X;
      case 2: return X * Z;
      case 3: return X * (4.0 * Z * Z - X * X - Y * Y);
    }
  }
  throw UsageError("solid_harmonic: table covers k <= 3, m in {0, 1}, m <= k");
}

double eval_point(int k, int m, const RadialProfile& g, const Vec3& x) {
  const double r = x.norm();
  return eval(g, r) * solid_harmonic(k, m, x) / std::pow(r, k);
}

double fd_laplacian(const std::function<double(const Vec3&)>& f, const Vec3& x,
                    const FDConfig& cfg) {
  const double h = cfg.h;
  double acc = -6.0 * f(x);
  for (int axis = 0; axis < 3; ++axis) {
    Vec3 e = Vec3::Zero();
    e[axis] = h;
    acc += f(x + e) + f(x - e);
  }
  return acc / (h * h);
}

double fd_radial_laplacian(const std::function<double(const Vec3&)>& f, const Vec3& x,
                           const FDConfig& cfg) {
  const double h = cfg.h;
  const double r = x.norm();
  const Vec3 step = (h / r) * x;
  const double fp = f(x + step), fm = f(x - step), f0 = f(x);
  return (fp - 2.0 * f0 + fm) / (h * h) + (fp - fm) / (h * r);
}

namespace {

struct ErrPair {
  double lap = 0.0;
  double diff = 0.0;
};

// Max-abs FD errors over the point set at one step size.
ErrPair sweep(int k, int m, const RadialProfile& g, const std::vector<Vec3>& points,
              double h, std::vector<PointRow>* rows) {
  FDConfig cfg{h};
  const double mu = mu_k(k);
  auto f = [&](const Vec3& p) { return eval_point(k, m, g, p); };
  ErrPair worst;
  for (const Vec3& x : points) {
    const double r = x.norm();
    const double angular = solid_harmonic(k, m, x) / std::pow(r, k);
    const ProfileJet jet = profile_jet(g, r);
    const double lap_exact = (jet.ddg + 2.0 * jet.dg / r - mu * jet.g / (r * r)) * angular;
    const double diff_exact = -mu * jet.g / (r * r) * angular;
    const double lap_fd = fd_laplacian(f, x, cfg);
    const double diff_fd = lap_fd - fd_radial_laplacian(f, x, cfg);
    worst.lap = std::max(worst.lap, std::abs(lap_fd - lap_exact));
    worst.diff = std::max(worst.diff, std::abs(diff_fd - diff_exact));
    if (rows != nullptr) {
      rows->push_back({x, lap_exact, lap_fd, std::abs(lap_fd - lap_exact), diff_exact,
                       diff_fd, std::abs(diff_fd - diff_exact)});
    }
  }
  return worst;
}

}  // namespace

ConsistencyReport consistency_report(int k, int m, const RadialProfile& g,
                                     const std::vector<Vec3>& points, const FDConfig& cfg) {
  if (points.empty()) throw UsageError("consistency_report: empty point set");
  ConsistencyReport rep;
  rep.k = k;
  rep.m = m;
  rep.h = cfg.h;
  const ErrPair coarse = sweep(k, m, g, points, cfg.h, &rep.rows);
  const ErrPair fine = sweep(k, m, g, points, 0.5 * cfg.h, nullptr);

  // One shared scale so the k = 0 case (identically zero difference) stays meaningful.
  double scale = 0.0;
  for (const PointRow& row : rep.rows)
    scale = std::max({scale, std::abs(row.exact), std::abs(row.diff_exact)});
  if (scale == 0.0) throw UsageError("consistency_report: degenerate mode (all exact values 0)");
  for (PointRow& row : rep.rows) {
    row.rel_err /= scale;
    row.diff_rel_err /= scale;
  }
  rep.max_rel_err = coarse.lap / scale;
  rep.diff_max_rel_err = coarse.diff / scale;
  rep.order_ratio = fine.lap > 0.0 ? coarse.lap / fine.lap : 0.0;
  rep.diff_order_ratio = fine.diff > 0.0 ? coarse.diff / fine.diff : 0.0;
  return rep;
}

std::vector<Vec3> default_points(int count, double r_min, double r_max) {
  if (count <= 0 || !(r_min > 0.0) || !(r_max >= r_min))
    throw UsageError("default_points: need count > 0 and 0 < r_min <= r_max");
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / count;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * i;
    const double r = r_min + (r_max - r_min) * (i + 0.5) / count;
    pts.push_back(r * Vec3(rho * std::cos(phi), rho * std::sin(phi), z));
  }
  return pts;
}

}  // namespace evanslewis

#pragma once

#include <functional>
#include <vector>

#include "evanslewis/profiles.hpp"
#include "evanslewis/types.hpp"

namespace evanslewis {

struct FDConfig {
  double h = 1e-3;
};

// Fixed unnormalized real solid harmonics H_km, k <= 3 (m = 0 zonal, m = 1 sectoral-ish).
double solid_harmonic(int k, int m, const Vec3& x);

// f(x) = g(|x|) H_km(x)/|x|^k, the Cartesian realization of a single mode.
double eval_point(int k, int m, const RadialProfile& g, const Vec3& x);

// 7-point second-order Laplacian stencil.
double fd_laplacian(const std::function<double(const Vec3&)>& f, const Vec3& x,
                    const FDConfig& cfg);

// Central differences along the ray through x: d^2/dr^2 + (2/r) d/dr.
double fd_radial_laplacian(const std::function<double(const Vec3&)>& f, const Vec3& x,
                           const FDConfig& cfg);

struct PointRow {
  Vec3 x;
  double exact, fd, rel_err;                 // full Laplacian vs mode formula
  double diff_exact, diff_fd, diff_rel_err;  // (lap - radial) vs -mu g/r^2 Y
};

struct ConsistencyReport {
  int k = 0, m = 0;
  double h = 0.0;
  std::vector<PointRow> rows;
  double max_rel_err = 0.0;       // relative to the max |exact| over the point set
  double order_ratio = 0.0;       // max-abs error at h over max-abs error at h/2
  double diff_max_rel_err = 0.0;
  double diff_order_ratio = 0.0;
};

ConsistencyReport consistency_report(int k, int m, const RadialProfile& g,
                                     const std::vector<Vec3>& points, const FDConfig& cfg);

// Deterministic Fibonacci-sphere directions with radii in [r_min, r_max].
std::vector<Vec3> default_points(int count, double r_min = 0.5, double r_max = 3.0);

}  // namespace evanslewis

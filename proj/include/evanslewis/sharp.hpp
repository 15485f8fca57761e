#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evanslewis/types.hpp"

namespace evanslewis {

// Value of z(z+1) at z = 1/2 + it: the action of the radial Laplacian on the
// scale-critical powers r^{1/2+it} (weighted by r^{-2}).
struct MellinSymbol {
  double t;
  double re;  // 3/4 - t^2
  double im;  // 2t
};

MellinSymbol symbol(double t);

// |A(t) - lambda|^2 with A the symbol value.
double symbol_dist_sq(double t, double lambda);

// Spectrum of -Lambda for a generalized Laplacian Delta_r + Lambda/r^2:
// strictly increasing eigenvalues starting at 0.
struct SpectrumSpec {
  std::vector<double> eigenvalues;
};

SpectrumSpec sphere_spectrum(int k_max);
void validate(const SpectrumSpec& spec);

// Spectrum contains 3/4, where the symbol distance degenerates.
struct SingularSpectrumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Method { closed_form, scan };

struct SharpConstantResult {
  double constant = 0.0;
  int attaining_index = 0;  // index k0 into the spectrum
  double attaining_t = 0.0;
  Method method = Method::closed_form;
  std::string warning;  // non-empty when the closed form is inapplicable
};

// Best constant sup over radial profiles of lambda^2 inv_sq / lap_sq for a
// single mode: lambda^2 / min_t |A(t) - lambda|^2. Closed form
// lambda^2/(lambda - 3/4)^2 for lambda > 3/4; scan always.
SharpConstantResult mode_spherical_constant(double lambda);

// max over nonzero spectrum eigenvalues of mode_spherical_constant.
SharpConstantResult global_spherical_constant(const SpectrumSpec& spec);

// alpha threshold 1 - (9/16)(1/lambda - 4/3)^2.
double generalized_alpha(double lambda);

struct ScanResult {
  double value;
  int attaining_k;  // sphere degree
  double attaining_t;
  int k_checked;  // truncation point of the eigenvalue scan
};

// inf over k >= 1, t of (|A - mu_k|^2 - |A|^2) / mu_k^2; equals 1/4 at (1, 0).
ScanResult improved_constant();

// inf over k >= 1, t of (|A - mu_k|^2 - k1 |A|^2) / mu_k^2 for the sphere
// (or a custom spectrum); sphere value (25 - 9 k1)/64.
ScanResult region_boundary(double k1);
ScanResult region_boundary(double k1, const SpectrumSpec& spec);

struct RadialAudit {
  double grid_max;        // max over k >= 1 and scanned t of |A|^2/|A - mu_k|^2
  double radial_exact;    // the k = 0 value, exactly 1
  double ratio_k1_t0;     // 9/25 reference point
  bool sup_below_one;     // grid_max < 1
};

RadialAudit radial_constant_audit();

}  // namespace evanslewis

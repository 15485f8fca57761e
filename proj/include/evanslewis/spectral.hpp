#pragma once

#include <functional>
#include <vector>

#include "evanslewis/profiles.hpp"
#include "evanslewis/quadrature.hpp"
#include "evanslewis/types.hpp"

namespace evanslewis {

enum class SpectrumKind { Sphere, Custom };

// One mode g(r)·Y of a test function. Distinct (k, m) labels are treated as
// orthonormal directions; Y itself is never evaluated here.
struct ModeComponent {
  int k = 0;
  int m = 0;
  double eigenvalue = 0.0;  // k(k+1) on the sphere, else the custom lambda_k
  RadialProfile profile;
};

struct TestFunction {
  std::vector<ModeComponent> components;
  SpectrumKind spectrum_kind = SpectrumKind::Sphere;
};

void validate(const TestFunction& f);

// Radial evaluators of the per-mode operator reductions.
std::function<double(double)> laplacian_mode(double eigenvalue, const RadialProfile& g);
std::function<double(double)> radial_laplacian_mode(const RadialProfile& g);
std::function<double(double)> f_star_mode(const RadialProfile& g);

struct ModeQuantities {
  int k = 0, m = 0;
  double eigenvalue = 0.0;
  double lap_sq = 0.0;       // |Delta f|^2 contribution
  double lap_r_sq = 0.0;     // |Delta_r f|^2
  double lap_s_sq = 0.0;     // |Delta_s f|^2 = lambda^2 * inv_sq
  double sph_grad_sq = 0.0;  // sum_j |L_j f / |x||^2 = lambda * inv_sq
  double inv_sq = 0.0;       // |f / |x|^2|^2
  double fstar_term = 0.0;   // <-sum_j L_j^2 f_*, f_*> = lambda * int f_*^2 dr
};

struct NormReport {
  double lap_sq = 0.0, lap_r_sq = 0.0, lap_s_sq = 0.0;
  double sph_grad_sq = 0.0, inv_sq = 0.0, fstar_term = 0.0;
  // lap_sq - [lap_r_sq + lap_s_sq + 2 R3 sph_grad_sq + 2 fstar_term]
  double identity_residual = 0.0;
  std::vector<ModeQuantities> per_mode;
};

NormReport norms_report(const TestFunction& f, const QuadratureConfig& cfg = {});

struct SlackTable {
  double radial_slack;          // lap_sq - lap_r_sq
  double spherical_slack;       // lap_sq - (25/64) lap_s_sq
  double improved_slack;        // lap_sq - lap_r_sq - (1/4) lap_s_sq
  double weighted_slack;        // lap_sq - k1 lap_r_sq - k2 lap_s_sq
  double radial_rellich_slack;  // lap_r_sq - (9/16) inv_sq
  double k1, k2;
  bool weights_proven;  // 9 k1 + 64 k2 <= 25 with k1, k2 >= 0
};

SlackTable check_inequalities(const NormReport& report, double k1 = 1.0, double k2 = 0.25);

struct ProofLedger {
  double alpha;
  double n1;        // sum_k mu_k (alpha mu_k - 3/2) inv_sq_k
  double n2_lower;  // sum_{k>=1} [mu_k (alpha mu_k - 3/2) + 9/16] inv_sq_k
};

ProofLedger proof_ledger(const TestFunction& f, double alpha, const QuadratureConfig& cfg = {});

struct CrossTerm {
  double x_value;      // lap_sq - lap_r_sq - lap_s_sq
  double x_direct;     // direct inner-product quadrature of the same quantity
  double lower_bound;  // sum_k 2 R3 lambda_k inv_sq_k
  double slack;        // x_value - lower_bound (equals 2 * fstar_term by the identity)
};

CrossTerm cross_term(const TestFunction& f, const QuadratureConfig& cfg = {});

}  // namespace evanslewis

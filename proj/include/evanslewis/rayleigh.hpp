#pragma once

#include <vector>

#include "evanslewis/profiles.hpp"
#include "evanslewis/types.hpp"

namespace evanslewis {

struct LogGrid {
  double u_lo, u_hi;
  int n;  // node count, nodes equally spaced
  double du() const { return (u_hi - u_lo) / (n - 1); }
  double node(int i) const { return u_lo + du() * i; }
  int interior() const { return n - 2; }
};

void validate(const LogGrid& grid);

struct FormKind {
  enum Kind { LAP, LAP_R, LAP_S, INV, MIX } kind = LAP;
  double k1 = 1.0, k2 = 0.25;  // MIX weights: k1 |Delta_r f|^2 + k2 |Delta_s f|^2

  static FormKind lap() { return {LAP, 0, 0}; }
  static FormKind lap_r() { return {LAP_R, 0, 0}; }
  static FormKind lap_s() { return {LAP_S, 0, 0}; }
  static FormKind inv() { return {INV, 0, 0}; }
  static FormKind mix(double k1, double k2) { return {MIX, k1, k2}; }
};

FormKind form_kind_from_name(const std::string& name);
std::string form_kind_name(const FormKind& f);

// Quadratic forms on interior node values x_i = g(e^{u_i}), i = 1..n-2;
// boundary nodes are pinned to zero (Dirichlet stand-in for compact support).
struct FormMatrices {
  Mat S, D;
  LogGrid grid;
  double lambda = 0.0;
  FormKind numerator, denominator;
};

struct AssemblyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FormMatrices assemble_forms(double lambda, const LogGrid& grid, FormKind numerator,
                            FormKind denominator);

// Evaluate one assembled form kind on sampled interior values (x^T M x).
Mat form_matrix(double lambda, const LogGrid& grid, FormKind kind);

struct EigResult {
  double value = 0.0;   // largest theta with S x = theta D x
  Vec coefficients;     // extremal interior grid function, max-abs normalized
  double residual = 0.0;
  LogGrid grid;
};

EigResult max_generalized_eig(const FormMatrices& F);

struct ThetaRow {
  double L;
  int n;
  double theta;
};

// theta(L) on grids [-L, L] with n proportional to L (du = 0.05).
std::vector<ThetaRow> convergence_study(double lambda, FormKind numerator,
                                        FormKind denominator, const std::vector<double>& Ls);

// Tabulated profile through the extremal grid function (zero at the ends).
RadialProfile extremizer_profile(const EigResult& e);

}  // namespace evanslewis

#include "evanslewis/rayleigh.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "evanslewis/parallel.hpp"

namespace evanslewis {

void validate(const LogGrid& grid) {
  if (grid.n < 16) throw UsageError("log grid needs at least 16 nodes");
  if (!(grid.u_lo < grid.u_hi)) throw UsageError("log grid window invalid");
}

FormKind form_kind_from_name(const std::string& name) {
  if (name == "LAP") return FormKind::lap();
  if (name == "LAP_R") return FormKind::lap_r();
  if (name == "LAP_S") return FormKind::lap_s();
  if (name == "INV") return FormKind::inv();
  throw UsageError("unknown form kind: " + name + " (use LAP, LAP_R, LAP_S, INV)");
}

std::string form_kind_name(const FormKind& f) {
  switch (f.kind) {
    case FormKind::LAP: return "LAP";
    case FormKind::LAP_R: return "LAP_R";
    case FormKind::LAP_S: return "LAP_S";
    case FormKind::INV: return "INV";
    case FormKind::MIX: return "MIX";
  }
  return "?";
}

namespace {

// Mode-operator stencil rows (g'' + g' - lambda g in u, i.e. r^2(Delta_r - lambda/r^2)
// after the log substitution) collocated at every node over the zero-extension
// of the interior unknowns. Rows at the two end nodes see only their single
// interior neighbour; they charge the zero-extension corner, which keeps the
// operator kernel (spanned by r-powers) from slipping through the ends where
// the exponential weight would otherwise make the leak free.
Mat operator_rows(const LogGrid& g, double lambda) {
  const int m = g.interior();
  const double du = g.du();
  const double lower = 1.0 / (du * du) - 1.0 / (2.0 * du);
  const double diag = -2.0 / (du * du) - lambda;
  const double upper = 1.0 / (du * du) + 1.0 / (2.0 * du);
  Mat B = Mat::Zero(g.n, m);
  B(0, 0) = upper;
  for (int i = 1; i <= g.n - 2; ++i) {  // row at node i; column j holds node j+1
    if (i >= 2) B(i, i - 2) = lower;
    B(i, i - 1) = diag;
    if (i <= g.n - 3) B(i, i) = upper;
  }
  B(g.n - 1, m - 1) = lower;
  return B;
}

// Trapezoid row weights du e^{-u_i}: the measure of int (.)^2 e^{-u} du, which is
// what each squared-operator integrand reduces to on the log grid.
Vec row_weights(const LogGrid& g) {
  Vec w(g.n);
  for (int i = 0; i < g.n; ++i) w[i] = g.du() * std::exp(-g.node(i));
  w[0] *= 0.5;
  w[g.n - 1] *= 0.5;
  return w;
}

Vec interior_weights(const LogGrid& g) {
  Vec w(g.interior());
  for (int j = 0; j < g.interior(); ++j) w[j] = g.du() * std::exp(-g.node(j + 1));
  return w;
}

Mat weighted_gram(const LogGrid& grid, double lambda) {
  Mat G = row_weights(grid).cwiseSqrt().asDiagonal() * operator_rows(grid, lambda);
  const int m = grid.interior();
  Mat D = Mat::Zero(m, m);
  D.selfadjointView<Eigen::Lower>().rankUpdate(G.transpose());
  return D.selfadjointView<Eigen::Lower>();
}

Vec equilibration(const LogGrid& g) {
  Vec e(g.interior());
  for (int j = 0; j < g.interior(); ++j) e[j] = std::exp(0.5 * g.node(j + 1));
  return e;
}

Mat equilibrate(const Mat& M, const Vec& e) {
  return e.asDiagonal() * M * e.asDiagonal();
}

}  // namespace

Mat form_matrix(double lambda, const LogGrid& grid, FormKind kind) {
  validate(grid);
  if (lambda < 0) throw UsageError("mode eigenvalue must be nonnegative");
  switch (kind.kind) {
    case FormKind::INV: return interior_weights(grid).asDiagonal();
    case FormKind::LAP_S: return (lambda * lambda) * interior_weights(grid).asDiagonal();
    case FormKind::LAP_R: return weighted_gram(grid, 0.0);
    case FormKind::LAP: return weighted_gram(grid, lambda);
    case FormKind::MIX:
      return kind.k1 * weighted_gram(grid, 0.0) +
             Mat((kind.k2 * lambda * lambda) * interior_weights(grid).asDiagonal());
  }
  throw UsageError("unknown form kind");
}

FormMatrices assemble_forms(double lambda, const LogGrid& grid, FormKind numerator,
                            FormKind denominator) {
  FormMatrices F;
  F.grid = grid;
  F.lambda = lambda;
  F.numerator = numerator;
  F.denominator = denominator;
  F.S = form_matrix(lambda, grid, numerator);
  F.D = form_matrix(lambda, grid, denominator);
  const double skew_s = (F.S - F.S.transpose()).cwiseAbs().maxCoeff();
  const double skew_d = (F.D - F.D.transpose()).cwiseAbs().maxCoeff();
  if (skew_s > 1e-12 * F.S.cwiseAbs().maxCoeff() ||
      skew_d > 1e-12 * F.D.cwiseAbs().maxCoeff())
    throw AssemblyError("assembled form lost symmetry");
  // Positive definiteness of D on the interior, checked after scale
  // equilibration (a congruence, so definiteness is unchanged).
  const Vec e = equilibration(grid);
  Eigen::LLT<Mat> llt(equilibrate(F.D, e));
  if (llt.info() != Eigen::Success)
    throw AssemblyError("denominator form is not positive definite");
  return F;
}

EigResult max_generalized_eig(const FormMatrices& F) {
  const int m = F.grid.interior();
  const Vec e = equilibration(F.grid);
  // x = E phi turns S x = theta D x into the equilibrated pencil with the
  // same eigenvalues and condition numbers a Cholesky can handle.
  const Mat Shat = equilibrate(F.S, e);
  const Mat Dhat = equilibrate(F.D, e);
  Eigen::LLT<Mat> llt(Dhat);
  if (llt.info() != Eigen::Success)
    throw AssemblyError("denominator form is not positive definite");
  const Mat L = llt.matrixL();
  Mat X = L.triangularView<Eigen::Lower>().solve(Shat);
  Mat C = L.triangularView<Eigen::Lower>().solve(X.transpose());
  C = 0.5 * (C + C.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Mat> es(C);
  if (es.info() != Eigen::Success) throw AssemblyError("eigensolver failed to converge");

  EigResult res;
  res.grid = F.grid;
  res.value = std::max(es.eigenvalues()(m - 1), 0.0);
  const Vec y = es.eigenvectors().col(m - 1);
  const Vec phi = L.transpose().triangularView<Eigen::Upper>().solve(y);
  const double num = (Shat * phi - res.value * (Dhat * phi)).norm();
  const double den = (Shat * phi).norm() + res.value * (Dhat * phi).norm();
  res.residual = den > 0 ? num / den : 0.0;

  Vec x = e.cwiseProduct(phi);
  int imax = 0;
  x.cwiseAbs().maxCoeff(&imax);
  if (x[imax] != 0.0) x /= x[imax];  // max-abs one, deterministic sign
  res.coefficients = x;
  return res;
}

std::vector<ThetaRow> convergence_study(double lambda, FormKind numerator,
                                        FormKind denominator, const std::vector<double>& Ls) {
  for (std::size_t i = 0; i + 1 < Ls.size(); ++i)
    if (!(Ls[i] < Ls[i + 1])) throw UsageError("L values must increase");
  std::vector<ThetaRow> rows(Ls.size());
  parallel_for(Ls.size(), [&](std::size_t i) {
    const double L = Ls[i];
    const int n = (int)std::lround(40.0 * L) + 1;
    LogGrid grid{-L, L, n};
    FormMatrices F = assemble_forms(lambda, grid, numerator, denominator);
    rows[i] = {L, n, max_generalized_eig(F).value};
  });
  return rows;
}

RadialProfile extremizer_profile(const EigResult& e) {
  if (e.coefficients.size() != e.grid.interior())
    throw UsageError("eigenresult does not match its grid");
  if (e.coefficients.cwiseAbs().maxCoeff() == 0.0)
    throw UsageError("zero eigenvector has no profile");
  if (e.residual > 1e-6) throw UsageError("eigenresult residual too large");
  Vec u(e.grid.n), y = Vec::Zero(e.grid.n);
  for (int i = 0; i < e.grid.n; ++i) u[i] = e.grid.node(i);
  y.segment(1, e.grid.interior()) = e.coefficients;
  return make_tabulated(u, y);
}

}  // namespace evanslewis

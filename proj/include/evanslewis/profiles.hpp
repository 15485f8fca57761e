#pragma once

#include <variant>

#include "evanslewis/types.hpp"

namespace evanslewis {

enum class Family { PowerBump, GaussianLog, PolyExp, Plateau, Tabulated };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// core(rho) = rho^a * exp(-b*rho); rapidly decaying, Gamma-integral oracles.
template <class Scalar> struct PolyExpP { Scalar a, b; };

// core(rho) = exp(-q*(log rho - c)^2); Gaussian in log radius.
template <class Scalar> struct GaussianLogP { Scalar q, c; };

// core(rho) = rho^beta * ramp((u - lo)/w1) * ramp((hi - u)/w2), u = log rho;
// identically rho^beta on the inner plateau, exactly 0 outside [lo, hi].
template <class Scalar> struct PowerBumpP { Scalar beta, lo, hi, w1, w2; };

// core(rho) = rho^{1/2} * chi(log(rho)/L), chi = 1 on [-1/2,1/2], 0 outside (-1,1).
template <class Scalar> struct PlateauP { Scalar L; };

// Natural cubic spline in u = log rho; zero outside the node range.
template <class Scalar> struct TabulatedP {
  VecX<Scalar> u, y, m;  // nodes, values, spline second derivatives
};

template <class Scalar>
struct RadialProfileT {
  Family family;
  std::variant<PolyExpP<Scalar>, GaussianLogP<Scalar>, PowerBumpP<Scalar>,
               PlateauP<Scalar>, TabulatedP<Scalar>>
      params;
  Scalar amp = Scalar(1);    // overall amplitude
  Scalar shift = Scalar(0);  // g(r) = amp * core(r * exp(-shift))
  Scalar r_lo, r_hi;         // window: negligible (or exactly zero) outside
};
using RadialProfile = RadialProfileT<double>;

double eval(const RadialProfile& p, double r);
double deriv1(const RadialProfile& p, double r);
double deriv2(const RadialProfile& p, double r);

// Value and first two derivatives at once (all quadrature integrands need the jet).
struct ProfileJet {
  double g, dg, ddg;
};
ProfileJet profile_jet(const RadialProfile& p, double r);

RadialProfile make_polyexp(double a, double b, double amp = 1.0);
RadialProfile make_gaussian_log(double q, double c, double amp = 1.0);
RadialProfile make_power_bump(double beta, double r_lo, double r_hi,
                              double ramp1, double ramp2, double amp = 1.0);
RadialProfile plateau_family(double L);
RadialProfile make_tabulated(const Vec& u, const Vec& y);

RadialProfile dilate(const RadialProfile& p, double s);

SupportWindow window_of(const RadialProfile& p);
bool compactly_supported(Family f);

}  // namespace evanslewis

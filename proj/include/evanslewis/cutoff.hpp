#pragma once

#include <cmath>

namespace evanslewis {

template <class Scalar>
struct CutoffJet {
  Scalar v, d1, d2;
};

// C^inf step built from the standard exp(-1/x) mollifier:
// S(x) = a/(a+b) with a = exp(-1/x), b = exp(-1/(1-x)); S = 0 for x <= 0,
// S = 1 for x >= 1, and all derivatives vanish at both ends.
template <class Scalar>
CutoffJet<Scalar> smoothstep(Scalar x) {
  if (x <= Scalar(0)) return {Scalar(0), Scalar(0), Scalar(0)};
  if (x >= Scalar(1)) return {Scalar(1), Scalar(0), Scalar(0)};
  const Scalar y = Scalar(1) - x;
  const Scalar a = std::exp(Scalar(-1) / x);
  const Scalar b = std::exp(Scalar(-1) / y);
  const Scalar den = a + b;
  const Scalar ix2 = Scalar(1) / (x * x), iy2 = Scalar(1) / (y * y);
  // S' = a'b - ab' over den^2 reduces to a*b*(1/x^2 + 1/(1-x)^2)/den^2.
  const Scalar w = ix2 + iy2;
  const Scalar num = a * b * w;
  const Scalar dnum = a * b * ((ix2 - iy2) * w + (Scalar(-2) * ix2 / x + Scalar(2) * iy2 / y));
  const Scalar dden = a * ix2 - b * iy2;
  const Scalar s = a / den;
  const Scalar s1 = num / (den * den);
  const Scalar s2 = (dnum * den - Scalar(2) * num * dden) / (den * den * den);
  return {s, s1, s2};
}

// Plateau cutoff: 1 on [-1/2, 1/2], 0 outside (-1, 1), smooth ramps.
template <class Scalar>
CutoffJet<Scalar> plateau_cutoff(Scalar x) {
  const Scalar ax = std::abs(x);
  CutoffJet<Scalar> s = smoothstep(Scalar(2) * (Scalar(1) - ax));
  const Scalar sgn = x < Scalar(0) ? Scalar(-1) : Scalar(1);
  return {s.v, Scalar(-2) * sgn * s.d1, Scalar(4) * s.d2};
}

}  // namespace evanslewis

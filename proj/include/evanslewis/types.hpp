#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace evanslewis {

template <class Scalar> using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar> using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar> using Vec3T = Eigen::Matrix<Scalar, 3, 1>;

using Vec = VecX<double>;
using Mat = MatX<double>;
using Vec3 = Vec3T<double>;

// Rellich constant n(n-4)/4 at n = 3.
inline constexpr double kR3 = -0.75;

// Sphere eigenvalues of -Laplace-Beltrami on S^2.
template <class Scalar = double>
constexpr Scalar mu_k(int k) { return Scalar(k) * Scalar(k + 1); }

// Window in log radius u = log r.
template <class Scalar>
struct SupportWindowT {
  Scalar u_lo, u_hi;
};
using SupportWindow = SupportWindowT<double>;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr const char* kEngineName = "evanslewis";
inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace evanslewis

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace halfline {

using complexd = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

inline bool on_nonnegative_axis(complexd lambda) {
  return lambda.imag() == 0.0 && lambda.real() >= 0.0;
}

// Principal square root of mu = -lambda, valid for lambda off [0, inf).
// The image lies in the open right halfplane.
inline complexd sqrt_mu(complexd mu) {
  if (on_nonnegative_axis(-mu))
    throw std::domain_error("sqrt_mu: lambda = -mu lies on [0, inf)");
  complexd s = std::sqrt(mu);
  if (s.real() <= 0.0) s = -s;
  return s;
}

// arg(lambda) normalized to (0, 2*pi). Rejects lambda on [0, inf).
inline double polar_angle(complexd lambda) {
  if (on_nonnegative_axis(lambda))
    throw std::domain_error("polar_angle: lambda lies on [0, inf)");
  double th = std::arg(lambda);
  if (th < 0.0) th += 2.0 * kPi;
  return th;
}

// Distance from lambda to the halfline [0, inf).
inline double distance_to_nonnegative_axis(complexd lambda) {
  if (lambda.real() >= 0.0) return std::abs(lambda.imag());
  return std::abs(lambda);
}

inline void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) throw std::domain_error(std::string(name) + " must be finite");
}

inline void require_finite(complexd z, const char* name) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::domain_error(std::string(name) + " must be finite");
}

}  // namespace halfline

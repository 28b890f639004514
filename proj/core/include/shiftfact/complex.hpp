#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace shiftfact {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Distance-based test for nonpositive integers (poles of the gamma function).
inline bool near_nonpositive_integer(Complex z, double tol) {
  const double n = std::round(z.real());
  return n <= 0.0 && std::abs(z - Complex(n, 0.0)) <= tol;
}

/// True when z is exactly a (real) integer, no tolerance.
inline bool is_exact_integer(Complex z) {
  return z.imag() == 0.0 && std::isfinite(z.real()) &&
         z.real() == std::round(z.real());
}

/// |a - b| / max(|a|, |b|); zero when both vanish.
inline double relative_residual(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

}  // namespace shiftfact

#pragma once

#include "shiftfact/complex.hpp"

namespace shiftfact {

/// Arguments within this distance of a nonpositive integer are poles.
inline constexpr double kPoleTolerance = 1e-10;

/// Principal branch of log Gamma(z): analytic on C minus (-inf, 0], real on
/// the positive axis. On the negative real axis the value is the limit from
/// above, so exp() still returns the correctly signed Gamma(z).
/// Throws PoleError at nonpositive integers.
Complex complex_log_gamma(Complex z);

/// Gamma(z). Throws PoleError at nonpositive integers.
Complex complex_gamma(Complex z);

/// 1/Gamma(z); entire, exactly zero at the poles of Gamma.
Complex reciprocal_gamma(Complex z);

/// Principal logarithm with -pi < arg w <= pi (a signed-zero imaginary part
/// is treated as +0, so log(-1) = i pi).
Complex principal_log(Complex w);

/// w^t = exp(t Log w) on the principal branch; 1^t = 1 for every t.
/// Throws DomainError for w = 0 with Re t <= 0.
Complex principal_power(Complex w, Complex t);

/// sin(pi z) with the argument reduced modulo 2 before scaling by pi.
Complex sin_pi(Complex z);

}  // namespace shiftfact

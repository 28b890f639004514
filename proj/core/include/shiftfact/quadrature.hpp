#pragma once

#include <cstddef>
#include <functional>

namespace shiftfact::quad {

/// Integrand on a finite interval, called with the abscissa and its distances
/// to the left and right endpoints (accurate even where x rounds to an
/// endpoint), so that factors like (1 - x)^a keep full precision.
using IntervalIntegrand = std::function<double(double x, double dist_left, double dist_right)>;
using LineIntegrand = std::function<double(double x)>;

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  double l1 = 0.0;     // integral of |f|
  std::size_t levels = 0;
};

/// Target relative agreement between successive refinement levels.
inline constexpr double kDefaultTolerance = 1e-13;

/// Double-exponential (tanh-sinh) rule on [a, b]; endpoint singularities are
/// allowed. Throws ConvergenceError when the error estimate exceeds
/// `accept` times the L1 norm.
QuadResult integrate_interval(const IntervalIntegrand& f, double a, double b,
                              double tolerance = kDefaultTolerance, double accept = 1e-9);

/// exp-sinh rule on [a, inf).
QuadResult integrate_half_line(const LineIntegrand& f, double a, double tolerance = kDefaultTolerance,
                               double accept = 1e-9);

/// sinh-sinh rule on (-inf, inf).
QuadResult integrate_real_line(const LineIntegrand& f, double tolerance = kDefaultTolerance,
                               double accept = 1e-9);

}  // namespace shiftfact::quad

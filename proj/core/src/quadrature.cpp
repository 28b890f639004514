#include "shiftfact/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <string>

#include "shiftfact/errors.hpp"

namespace shiftfact::quad {

namespace {

constexpr std::size_t kMaxRefinements = 18;

void accept_or_throw(const QuadResult& r, double accept, const char* rule) {
  if (!std::isfinite(r.value) || r.error > accept * std::max(r.l1, 1e-300)) {
    throw ConvergenceError(std::string(rule) + ": error estimate " + std::to_string(r.error) +
                           " exceeds tolerance (L1 " + std::to_string(r.l1) + ")");
  }
}

}  // namespace

QuadResult integrate_interval(const IntervalIntegrand& f, double a, double b, double tolerance, double accept) {
  if (!(b > a)) throw DomainError("integrate_interval: requires a < b");
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  // On [-1, 1] the second argument is -1 - u (<= 0) near -1 and 1 - u (>= 0) near 1.
  auto g = [&](double u, double uc) {
    const double left = uc < 0 ? -half * uc : half * (2.0 - uc);
    const double right = uc < 0 ? half * (2.0 + uc) : half * uc;
    return half * f(mid + half * u, left, right);
  };
  boost::math::quadrature::tanh_sinh<double> rule(kMaxRefinements);
  QuadResult r;
  r.value = rule.integrate(g, tolerance, &r.error, &r.l1, &r.levels);
  accept_or_throw(r, accept, "tanh-sinh");
  return r;
}

QuadResult integrate_half_line(const LineIntegrand& f, double a, double tolerance, double accept) {
  boost::math::quadrature::exp_sinh<double> rule(kMaxRefinements);
  QuadResult r;
  r.value = rule.integrate(f, a, std::numeric_limits<double>::infinity(), tolerance, &r.error, &r.l1, &r.levels);
  accept_or_throw(r, accept, "exp-sinh");
  return r;
}

QuadResult integrate_real_line(const LineIntegrand& f, double tolerance, double accept) {
  boost::math::quadrature::sinh_sinh<double> rule(kMaxRefinements);
  QuadResult r;
  r.value = rule.integrate(f, tolerance, &r.error, &r.l1, &r.levels);
  accept_or_throw(r, accept, "sinh-sinh");
  return r;
}

}  // namespace shiftfact::quad

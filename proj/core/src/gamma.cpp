#include "shiftfact/gamma.hpp"

#include <array>
#include <cmath>

#include "shiftfact/errors.hpp"

namespace shiftfact {
namespace {

// Lanczos approximation, g = 607/128 with 15 terms. Coefficients as
// tabulated by P. Godfrey ("A note on the computation of the convergent
// Lanczos complex Gamma approximation", 2001); relative accuracy close to
// 1e-15 in the right half plane.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoef = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

// log Gamma(z) for Re z >= 1/2.
Complex lanczos_log_gamma(Complex z) {
  const Complex x = z - 1.0;
  Complex series = kLanczosCoef[0];
  for (std::size_t k = 1; k < kLanczosCoef.size(); ++k) {
    series += kLanczosCoef[k] / (x + static_cast<double>(k));
  }
  const Complex t = x + kLanczosG + 0.5;
  return kHalfLog2Pi + (x + 0.5) * std::log(t) - t + std::log(series);
}

Complex normalize_zero_imag(Complex z) {
  return z.imag() == 0.0 ? Complex(z.real(), 0.0) : z;
}

void check_pole(Complex z, const char* where) {
  if (near_nonpositive_integer(z, kPoleTolerance)) {
    throw PoleError(z, std::string(where) + ": argument is a nonpositive integer");
  }
}

}  // namespace

Complex sin_pi(Complex z) {
  const double n = std::round(z.real());
  const Complex r(z.real() - n, z.imag());
  const Complex v = std::sin(kPi * r);
  return (static_cast<long long>(n) % 2 == 0) ? v : -v;
}

Complex complex_log_gamma(Complex z) {
  check_pole(z, "log_gamma");
  z = normalize_zero_imag(z);
  if (z.real() >= 0.5) return lanczos_log_gamma(z);

  // log Gamma(z) = log Gamma(z + m) - sum log(z + k); each principal log is
  // analytic off (-inf, 0], which keeps the sum on the principal branch.
  const int shift = static_cast<int>(std::ceil(0.5 - z.real()));
  Complex acc = lanczos_log_gamma(z + static_cast<double>(shift));
  for (int k = 0; k < shift; ++k) {
    acc -= std::log(normalize_zero_imag(z + static_cast<double>(k)));
  }
  return acc;
}

Complex complex_gamma(Complex z) {
  check_pole(z, "gamma");
  if (z.real() >= 0.5) return std::exp(lanczos_log_gamma(z));
  // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z).
  return kPi / (sin_pi(z) * std::exp(lanczos_log_gamma(1.0 - z)));
}

Complex reciprocal_gamma(Complex z) {
  if (z.real() >= 0.5) return std::exp(-lanczos_log_gamma(z));
  return sin_pi(z) * std::exp(lanczos_log_gamma(1.0 - z)) / kPi;
}

Complex principal_log(Complex w) { return std::log(normalize_zero_imag(w)); }

Complex principal_power(Complex w, Complex t) {
  if (w == Complex(1.0, 0.0)) return {1.0, 0.0};
  if (w == Complex(0.0, 0.0)) {
    if (t.real() > 0.0) return {0.0, 0.0};
    throw DomainError("principal_power: 0^t with Re t <= 0");
  }
  return std::exp(t * principal_log(w));
}

}  // namespace shiftfact

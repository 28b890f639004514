#include "shiftfact/sfact.hpp"

#include <climits>
#include <cmath>

#include "shiftfact/connecting.hpp"

namespace shiftfact {

Complex sf_general(Complex z, Complex s, Complex t) {
  if (is_exact_integer(t) && std::abs(t.real()) < INT_MAX) {
    return sf_integer(z, s, static_cast<int>(t.real()));
  }
  if (s == Complex(0.0, 0.0)) return principal_power(z, t);

  const Complex base = z / s;
  if (near_nonpositive_integer(base, kPoleTolerance)) {
    throw PoleError(base, "(z)_{s;t}: z/s is a nonpositive integer");
  }
  return principal_power(s, t) * std::exp(complex_log_gamma(base + t) - complex_log_gamma(base));
}

Complex rising(Complex z, Complex t) { return sf_general(z, {1.0, 0.0}, t); }
Complex falling(Complex z, Complex t) { return sf_general(z, {-1.0, 0.0}, t); }

Complex delta_s_power(Complex z, Complex s, Complex t, int p) {
  if (p < 0) throw DomainError("delta_s_power: p must be nonnegative");
  if (p == 0) return sf_general(z, s, t);
  const Complex lead = falling(t, p) * ipow(s, p);
  if (lead == Complex(0.0, 0.0)) return lead;
  return lead * sf_general(z + static_cast<double>(p) * s, s, t - static_cast<double>(p));
}

Complex GeneratingSeries::evaluate(Complex x) const {
  Complex acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Complex GeneratingSeries::closed_form(Complex x) const {
  if (s == Complex(0.0, 0.0)) return std::exp(x * z);
  return principal_power(1.0 - s * x, -z / s);
}

GeneratingSeries generating_series(Complex z, Complex s, int order) {
  if (order < 0) throw DomainError("generating_series: truncation order must be nonnegative");
  GeneratingSeries g{z, s, order, {}};
  g.coefficients.reserve(static_cast<std::size_t>(order) + 1);
  Complex c = 1.0;
  g.coefficients.push_back(c);
  for (int n = 1; n <= order; ++n) {
    c *= (z + static_cast<double>(n - 1) * s) / static_cast<double>(n);
    g.coefficients.push_back(c);
  }
  return g;
}

namespace {

template <Field T>
std::vector<T> expand_with_stirling(const T& s, int n) {
  if (n < 0) throw DomainError("monomial_expansion: n must be nonnegative");
  const auto table = connecting_table(ConnectingKind::StirlingFirst, n);
  std::vector<T> coeffs(static_cast<std::size_t>(n) + 1, from_int<T>(0));
  for (int k = 0; k <= n; ++k) {
    BigInt unsigned_stirling = abs(table.at(n, k));
    T c;
    if constexpr (is_exact_v<T>) {
      c = Rational(unsigned_stirling);
    } else {
      c = Complex(unsigned_stirling.get_d(), 0.0);
    }
    coeffs[static_cast<std::size_t>(k)] = c * ipow(s, n - k);
  }
  return coeffs;
}

}  // namespace

std::vector<Complex> monomial_expansion(Complex s, int n) { return expand_with_stirling(s, n); }
std::vector<Rational> monomial_expansion(const Rational& s, int n) {
  return expand_with_stirling(s, n);
}

}  // namespace shiftfact

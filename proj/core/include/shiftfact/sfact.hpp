#pragma once

#include <string>
#include <vector>

#include "shiftfact/complex.hpp"
#include "shiftfact/gamma.hpp"
#include "shiftfact/scalar.hpp"

namespace shiftfact {

/// (z)_{s;n} = z (z+s) ... (z+(n-1)s) for n >= 0; 1 when n = 0.
/// Exact when T is Rational.
template <Field T>
T sf_product(const T& z, const T& s, int n) {
  if (n < 0) throw DomainError("sf_product: index must be nonnegative");
  T acc = from_int<T>(1);
  T factor = z;
  for (int k = 0; k < n; ++k) {
    acc *= factor;
    factor += s;
  }
  return acc;
}

/// (z)_{s;-q} = 1 / ((z - qs)(z - (q-1)s) ... (z - s)) for q >= 1.
/// A vanishing factor z - ks raises PoleError naming k.
template <Field T>
T sf_negative(const T& z, const T& s, int q) {
  if (q < 0) throw DomainError("sf_negative: q must be nonnegative");
  T denom = from_int<T>(1);
  for (int k = 1; k <= q; ++k) {
    const T factor = z - from_int<T>(k) * s;
    if (vanishes(factor)) {
      throw PoleError(to_complex(z),
                      "(z)_{s;-" + std::to_string(q) + "}: factor z - k s vanishes at k = " +
                          std::to_string(k));
    }
    denom *= factor;
  }
  return from_int<T>(1) / denom;
}

/// (z)_{s;q} for any integer q, always through the product forms.
template <Field T>
T sf_integer(const T& z, const T& s, int q) {
  return q >= 0 ? sf_product(z, s, q) : sf_negative(z, s, -q);
}

/// Generalized s-shifted factorial s^t Gamma(z/s + t) / Gamma(z/s).
///
/// Dispatch: an exactly integral t goes through the product forms; s == 0
/// (exact comparison) is z^t on the principal branch; otherwise the gamma
/// ratio is evaluated as a log-gamma difference.
Complex sf_general(Complex z, Complex s, Complex t);

/// Rising factorial (z)_n = (z)_{1;n} and falling factorial [z]_n = (z)_{-1;n}.
template <Field T>
T rising(const T& z, int n) {
  return sf_integer(z, from_int<T>(1), n);
}
template <Field T>
T falling(const T& z, int n) {
  return sf_integer(z, from_int<T>(-1), n);
}
Complex rising(Complex z, Complex t);
Complex falling(Complex z, Complex t);

/// Generalized binomial coefficient C(z, k) = [z]_k / k!; zero for k < 0.
template <Field T>
T binomial(const T& z, int k) {
  if (k < 0) return from_int<T>(0);
  T denom = from_int<T>(1);
  for (int j = 2; j <= k; ++j) denom *= from_int<T>(j);
  return falling(z, k) / denom;
}

/// p-fold s-difference: Delta_s^p (z)_{s;t} = [t]_p s^p (z + ps)_{s;t-p}.
Complex delta_s_power(Complex z, Complex s, Complex t, int p);

/// Truncated exponential generating function of the s-shifted factorials,
/// sum_{n<=N} (z)_{s;n} x^n / n!.
struct GeneratingSeries {
  Complex z;
  Complex s;
  int truncation_order = 0;
  std::vector<Complex> coefficients;  // c_n = (z)_{s;n} / n!, n = 0..N

  /// Horner evaluation of the truncated series.
  Complex evaluate(Complex x) const;

  /// (1 - s x)^{-z/s}, or exp(x z) when s = 0.
  Complex closed_form(Complex x) const;

  /// The series converges for |s x| < 1 (everywhere when s = 0).
  bool converges_at(Complex x) const { return std::abs(s * x) < 1.0; }
};

GeneratingSeries generating_series(Complex z, Complex s, int order);

/// Coefficients of (z)_{s;n} in the monomial basis, lowest degree first:
/// entry k is |s(n,k)| s^{n-k} with |s(n,k)| the unsigned Stirling numbers of
/// the first kind.
std::vector<Complex> monomial_expansion(Complex s, int n);
std::vector<Rational> monomial_expansion(const Rational& s, int n);

}  // namespace shiftfact

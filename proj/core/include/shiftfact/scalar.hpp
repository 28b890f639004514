#pragma once

#include <cmath>
#include <concepts>
#include <string>
#include <type_traits>

#include "shiftfact/complex.hpp"
#include "shiftfact/errors.hpp"
#include "shiftfact/rational.hpp"

namespace shiftfact {

/// The two numeric carriers: double-precision complex and exact rational.
template <class T>
concept Field = std::same_as<T, Complex> || std::same_as<T, Rational>;

template <Field T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

/// Zero test used for side conditions. Exact on rationals; on complex values
/// a factor counts as vanishing when it is within `tol` of zero.
inline bool vanishes(const Complex& v, double tol = 1e-10) { return std::abs(v) <= tol; }
inline bool vanishes(const Rational& v, double = 0.0) { return v.is_zero(); }

inline Complex to_complex(const Complex& v) { return v; }
inline Complex to_complex(const Rational& v) { return {v.to_double(), 0.0}; }

template <Field T>
T from_int(long v) {
  if constexpr (is_exact_v<T>) {
    return Rational(v);
  } else {
    return Complex(static_cast<double>(v), 0.0);
  }
}

/// x^p for integer p by repeated squaring; p < 0 inverts.
template <Field T>
T ipow(T x, long p) {
  if (p < 0) {
    if (vanishes(x, 0.0)) throw PoleError(to_complex(x), "negative power of zero");
    x = from_int<T>(1) / x;
    p = -p;
  }
  T result = from_int<T>(1);
  while (p > 0) {
    if (p & 1) result *= x;
    x *= x;
    p >>= 1;
  }
  return result;
}

/// (-1)^p.
inline int parity_sign(long p) { return (p % 2 == 0) ? 1 : -1; }

inline std::string to_string(const Rational& v) { return v.str(); }
std::string to_string(const Complex& v);

}  // namespace shiftfact

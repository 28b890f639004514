#include "shiftfact/triangular.hpp"

#include <algorithm>
#include <utility>

#include <boost/multiprecision/cpp_complex.hpp>

#include "shiftfact/sfact.hpp"

namespace shiftfact::det {

namespace {

template <Field T>
void require_off_progression(const T& x, const T& s, int m_max, const char* name) {
  for (int m = 0; m <= m_max; ++m) {
    if (vanishes(T(x + from_int<T>(m) * s))) {
      throw PoleError(to_complex(x), std::string(name) + " lies on 0, -s, ..., -" + std::to_string(m_max) + "s");
    }
  }
}

/// The k-sum cancels heavily for complex parameters (terms can exceed the
/// result by ten orders of magnitude), so complex sums run in 113-bit
/// precision. Rationals are already exact.
template <Field T>
struct Work;

template <>
struct Work<Rational> {
  using type = Rational;
  static Rational lift(const Rational& v) { return v; }
  static Rational narrow(const Rational& v) { return v; }
  static double magnitude(const Rational& v) { return std::abs(v.to_double()); }
};

template <>
struct Work<Complex> {
  using type = boost::multiprecision::cpp_complex_quad;
  static type lift(Complex z) { return type(z.real(), z.imag()); }
  static Complex narrow(const type& v) {
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
  }
  static double magnitude(const type& v) { return static_cast<double>(abs(v)); }
};

/// x (x + s) ... (x + (k-1)s) in the working type.
template <class W>
W rising_product(const W& x, const W& s, int k) {
  W acc(1);
  for (int m = 0; m < k; ++m) acc *= x + W(m) * s;
  return acc;
}

/// Explicit row combination and the sum of |terms|.
template <Field T>
std::pair<typename Work<T>::type, double> k_sum(TriangularKind kind, const TriangularParams<T>& params, int i,
                                                int j) {
  using W = typename Work<T>::type;
  struct {
    W s, b, c, d;
  } const p{Work<T>::lift(params.s), Work<T>::lift(params.b), Work<T>::lift(params.c), Work<T>::lift(params.d)};
  const W& s = p.s;
  const W minus_s = W(0) - s;
  const W si(i);
  const W one(1);
  const W two(2);
  W sum(0);
  double scale = 0.0;
  W binom = one;  // C(i, k)
  for (int k = 0; k <= i; ++k) {
    const W sign(parity_sign(i - k));
    const W node = p.b + W(j) * s;
    W term;
    switch (kind) {
      case TriangularKind::Lemma1Affine:
        term = sign * binom * rising_product(W(p.b + (si - one) * s), minus_s, i - k) * rising_product(node, s, k);
        break;
      case TriangularKind::Lemma2Affine:
        term = binom / (rising_product(W(W(0) - p.b - two * (si - one) * s), s, i - k) * rising_product(node, s, k));
        break;
      case TriangularKind::Lemma3Affine: {
        const W cj = p.c + W(j) * s;
        const W dj = p.d + W(j) * s;
        term = sign * binom * rising_product(W(p.c + (si - one) * s), minus_s, i - k) /
               rising_product(W(p.d + two * (si - one) * s), minus_s, i - k) * rising_product(cj, s, k) /
               rising_product(dj, s, k);
        break;
      }
    }
    sum += term;
    scale += Work<T>::magnitude(term);
    binom = binom * W(i - k) / W(k + 1);
  }
  return {sum, scale};
}

template <Field T>
std::string describe(TriangularKind kind, const TriangularParams<T>& p, int i, int j) {
  std::string out = std::string(triangular_kind_name(kind)) + " i=" + std::to_string(i) +
                    " j=" + std::to_string(j) + " s=" + to_string(p.s);
  if (kind == TriangularKind::Lemma3Affine) {
    out += " c=" + to_string(p.c) + " d=" + to_string(p.d);
  } else {
    out += " b=" + to_string(p.b);
  }
  return out;
}

}  // namespace

std::string_view triangular_kind_name(TriangularKind kind) {
  switch (kind) {
    case TriangularKind::Lemma1Affine: return "Lemma1Affine";
    case TriangularKind::Lemma2Affine: return "Lemma2Affine";
    case TriangularKind::Lemma3Affine: return "Lemma3Affine";
  }
  return "?";
}

template <Field T>
TriangularSides<T> triangular_sides(TriangularKind kind, const TriangularParams<T>& p, int i, int j) {
  if (i < 0 || j < 0) throw DomainError("triangular_sides: i and j must be nonnegative");
  const T& s = p.s;
  const T minus_s = -s;
  const T si = from_int<T>(i);
  const T one = from_int<T>(1);
  const int m_max = std::max(2 * i - 2, i + j - 1);
  if (kind == TriangularKind::Lemma2Affine) require_off_progression(p.b, s, m_max, "b");
  if (kind == TriangularKind::Lemma3Affine) require_off_progression(p.d, s, m_max, "d");

  TriangularSides<T> out{from_int<T>(0), from_int<T>(0), 0.0};
  const auto [sum, scale] = k_sum(kind, p, i, j);
  out.row_combination = Work<T>::narrow(sum);
  out.scale = scale;

  const T falling_j = falling(from_int<T>(j), i);
  switch (kind) {
    case TriangularKind::Lemma1Affine:
      out.closed_form = ipow(s, i) * falling_j;
      break;
    case TriangularKind::Lemma2Affine:
      out.closed_form = ipow(minus_s, i) * falling_j /
                        (sf_product(T(p.b + (si - one) * s), s, i) * sf_product(T(p.b + from_int<T>(j) * s), s, i));
      break;
    case TriangularKind::Lemma3Affine:
      out.closed_form = ipow(s, i) * falling_j * sf_product(T(p.d - p.c), s, i) /
                        (sf_product(T(p.d + from_int<T>(j) * s), s, i) * sf_product(T(p.d + (si - one) * s), s, i));
      break;
  }
  return out;
}

template <Field T>
T triangular_entry(TriangularKind kind, const TriangularParams<T>& p, int i, int j, double tol, double zero_tol) {
  const auto sides = triangular_sides(kind, p, i, j);
  bool ok;
  if constexpr (is_exact_v<T>) {
    ok = sides.row_combination == sides.closed_form;
  } else if (sides.closed_form == Complex(0.0, 0.0)) {
    ok = std::abs(sides.row_combination) <= zero_tol * std::max(sides.scale, 1.0);
  } else {
    ok = relative_residual(sides.row_combination, sides.closed_form) <= tol;
  }
  if (!ok) {
    throw IdentityViolation("row reduction mismatch for " + describe(kind, p, i, j) + ": k-sum " +
                            to_string(sides.row_combination) + " vs closed form " + to_string(sides.closed_form));
  }
  return sides.closed_form;
}

template TriangularSides<Complex> triangular_sides(TriangularKind, const TriangularParams<Complex>&, int, int);
template TriangularSides<Rational> triangular_sides(TriangularKind, const TriangularParams<Rational>&, int, int);
template Complex triangular_entry(TriangularKind, const TriangularParams<Complex>&, int, int, double, double);
template Rational triangular_entry(TriangularKind, const TriangularParams<Rational>&, int, int, double, double);

}  // namespace shiftfact::det

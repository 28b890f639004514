#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "shiftfact/detform.hpp"
#include "shiftfact/gamma.hpp"
#include "shiftfact/sfact.hpp"

namespace shiftfact::det {

namespace {

using Wide = std::complex<long double>;

Wide widen(Complex z) { return {z.real(), z.imag()}; }

/// Determinant of the row-major n x n matrix `m`, consumed in place.
Wide lu_determinant(std::vector<Wide>& m, std::size_t n) {
  Wide det = 1.0L;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    long double best = std::abs(m[k * n + k]);
    for (std::size_t r = k + 1; r < n; ++r) {
      const long double mag = std::abs(m[r * n + k]);
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best == 0.0L) return 0.0L;
    if (pivot != k) {
      std::swap_ranges(m.begin() + pivot * n, m.begin() + (pivot + 1) * n, m.begin() + k * n);
      det = -det;
    }
    const Wide diag = m[k * n + k];
    det *= diag;
    for (std::size_t r = k + 1; r < n; ++r) {
      const Wide factor = m[r * n + k] / diag;
      if (factor == Wide(0.0L, 0.0L)) continue;
      for (std::size_t c = k + 1; c < n; ++c) m[r * n + c] -= factor * m[k * n + c];
    }
  }
  return det;
}

/// x (x + s) ... (x + (k-1)s).
Wide product(Wide x, Wide s, int k) {
  Wide acc = 1.0L;
  for (int m = 0; m < k; ++m) acc *= x + static_cast<long double>(m) * s;
  return acc;
}

/// (x)_{s;-k} = 1 / ((x - s)(x - 2s) ... (x - ks)).
Wide negative(Wide x, Wide s, int k) {
  Wide acc = 1.0L;
  for (int m = 1; m <= k; ++m) acc *= x - static_cast<long double>(m) * s;
  return 1.0L / acc;
}

long double factorial(int k) {
  long double acc = 1.0L;
  for (int m = 2; m <= k; ++m) acc *= m;
  return acc;
}

/// Per-column factor for the gamma kinds (1 elsewhere).
Complex column_factor(const DeterminantSpec<Complex>& spec, Complex z, int n1) {
  const Complex azb = spec.a * z + spec.b;
  switch (spec.kind) {
    case Kind::SShiftedComplexIndex:
      return sf_general(z, spec.s, spec.t);
    case Kind::GammaShift:
      return complex_gamma(z);
    case Kind::InvGamma:
      return reciprocal_gamma(z + static_cast<double>(n1));
    case Kind::GammaRatio: {
      const std::array<Complex, 1> num{z};
      const std::array<Complex, 1> den{azb};
      return gamma_quotient(num, den);
    }
    case Kind::GammaNegShift:
      return complex_gamma(z - static_cast<double>(n1));
    case Kind::InvGammaNeg:
      return reciprocal_gamma(z);
    case Kind::GammaRatioNeg: {
      const std::array<Complex, 1> num{azb - static_cast<double>(n1)};
      const std::array<Complex, 1> den{z - static_cast<double>(n1)};
      return gamma_quotient(num, den);
    }
    default:
      return 1.0;
  }
}

/// Row-dependent part of entry (i, j); the full entry is this times the
/// column factor of j.
Wide reduced_entry(const DeterminantSpec<Complex>& spec, const NodeSet<Complex>& nodes, int i, std::size_t j) {
  const int n1 = static_cast<int>(nodes.size()) - 1;
  const Wide z = widen(nodes[j]);
  const Wide s = widen(spec.s);
  const Wide azb = widen(spec.a) * z + widen(spec.b);
  const Wide one = 1.0L;
  const Wide minus_one = -1.0L;
  switch (spec.kind) {
    case Kind::SShifted:
      return product(z, s, i);
    case Kind::SShiftedOffsets:
      return product(widen(spec.offsets[static_cast<std::size_t>(i)]) + z, s, i);
    case Kind::SShiftedComplexIndex:
      return product(z + widen(spec.t) * s, s, i);
    case Kind::InvSShifted:
      return 1.0L / product(z, s, i);
    case Kind::RatioSShifted:
      return product(z, s, i) / product(azb, s, i);
    case Kind::NegIndex:
      return negative(z, s, i);
    case Kind::InvNegIndex:
      return product(z - s, -s, i);
    case Kind::RatioNegIndex:
      return negative(azb, s, i) * product(z - s, -s, i);
    case Kind::TwoSetSymmetric:
      return product(widen(nodes[static_cast<std::size_t>(i)]) + widen(spec.second[j]), s, n1);
    case Kind::GammaShift:
      return product(z, one, i);
    case Kind::BinomialElem:
      return product(z, minus_one, i) / factorial(i);
    case Kind::InvGamma:
      return product(z + static_cast<long double>(i), one, n1 - i);
    case Kind::InvBinomial:
      return factorial(i) / product(z, minus_one, i);
    case Kind::GammaRatio:
      return product(z, one, i) / product(azb, one, i);
    case Kind::BinomialRatio:
      return product(z, minus_one, i) / product(azb, minus_one, i);
    case Kind::GammaNegShift:
      return product(z - static_cast<long double>(n1), one, n1 - i);
    case Kind::InvGammaNeg:
      return product(z - static_cast<long double>(i), one, i);
    case Kind::GammaRatioNeg: {
      const long double base = static_cast<long double>(n1);
      return product(azb - base, one, n1 - i) / product(z - base, one, n1 - i);
    }
    case Kind::TwoSetGammaRatio:
      return product(widen(nodes[static_cast<std::size_t>(i)]) + widen(spec.second[j]), one, n1);
    case Kind::TwoSetBinomial:
      return product(widen(nodes[static_cast<std::size_t>(i)]) + widen(spec.second[j]), minus_one, n1) /
             factorial(n1);
  }
  return 0.0L;
}

bool finite(Wide v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace

Complex det_oracle(Matrix<Complex> input) {
  const std::size_t n = input.size();
  std::vector<Wide> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = widen(input(i, j));
  }
  const Wide det = lu_determinant(m, n);
  return {static_cast<double>(det.real()), static_cast<double>(det.imag())};
}

Complex det_oracle_extended(const DeterminantSpec<Complex>& spec, const NodeSet<Complex>& nodes) {
  // Materializing the double matrix first gives the same PoleError
  // behaviour as build_matrix, and the fallback when a factor degenerates.
  Matrix<Complex> plain = build_matrix(spec, nodes);
  const std::size_t n = nodes.size();
  const int n1 = static_cast<int>(n) - 1;
  std::vector<Wide> m(n * n);
  Wide scale = 1.0L;
  for (std::size_t j = 0; j < n; ++j) {
    const Wide factor = widen(column_factor(spec, nodes[j], n1));
    if (!finite(factor) || factor == Wide(0.0L, 0.0L)) return det_oracle(std::move(plain));
    scale *= factor;
    for (std::size_t i = 0; i < n; ++i) {
      const Wide v = reduced_entry(spec, nodes, static_cast<int>(i), j);
      if (!finite(v)) return det_oracle(std::move(plain));
      m[i * n + j] = v;
    }
  }
  const Wide det = scale * lu_determinant(m, n);
  if (!finite(det)) return det_oracle(std::move(plain));
  return {static_cast<double>(det.real()), static_cast<double>(det.imag())};
}

Rational det_oracle(Matrix<Rational> m) {
  const std::size_t n = m.size();
  int sign = 1;
  Rational previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return Rational(0);
      m.swap_rows(r, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  if (n == 0) return Rational(1);
  return sign < 0 ? Rational(0) - m(n - 1, n - 1) : m(n - 1, n - 1);
}

}  // namespace shiftfact::det

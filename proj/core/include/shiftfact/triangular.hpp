#pragma once

#include <string_view>

#include "shiftfact/scalar.hpp"

namespace shiftfact::det {

/// One-step row reductions of the affine-node matrices M_{ij} = f_i(b + js).
enum class TriangularKind {
  Lemma1Affine,  // (b + js)_{s;i}                      -> s^i [j]_i
  Lemma2Affine,  // 1 / (b + js)_{s;i}                  -> (-s)^i [j]_i / ((b+(i-1)s)_{s;i} (b+js)_{s;i})
  Lemma3Affine,  // (c + js)_{s;i} / (d + js)_{s;i}     -> s^i [j]_i (d-c)_{s;i} / ((d+js)_{s;i} (d+(i-1)s)_{s;i})
};

std::string_view triangular_kind_name(TriangularKind kind);

/// b is used by the first two kinds, c and d by the third.
template <Field T>
struct TriangularParams {
  T s = from_int<T>(1);
  T b = from_int<T>(0);
  T c = from_int<T>(0);
  T d = from_int<T>(1);
};

template <Field T>
struct TriangularSides {
  T row_combination;  // explicit k-sum over the reduced rows
  T closed_form;
  double scale = 0.0;  // sum of |terms| in the k-sum
};

/// Evaluates both sides for row i, column j. Throws PoleError when b + m s
/// (or d + m s) vanishes for a shift m the row actually uses,
/// m <= max(2i - 2, i + j - 1).
template <Field T>
TriangularSides<T> triangular_sides(TriangularKind kind, const TriangularParams<T>& params, int i, int j);

/// Closed form after asserting agreement with the k-sum: relative `tol` when
/// the closed form is nonzero, `zero_tol` times the term scale when it
/// vanishes (i > j). Exact comparison on rationals. Mismatch raises
/// IdentityViolation naming kind, i, j and parameters.
template <Field T>
T triangular_entry(TriangularKind kind, const TriangularParams<T>& params, int i, int j, double tol = 1e-10,
                   double zero_tol = 1e-12);

}  // namespace shiftfact::det

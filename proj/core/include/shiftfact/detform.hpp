#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shiftfact/scalar.hpp"

namespace shiftfact::det {

/// Determinant families with a closed-form evaluation. Comments give the
/// matrix element in row i, column j (nodes z_j, second node set w_j).
enum class Kind {
  SShifted,              // (z_j)_{s;i}
  SShiftedOffsets,       // (b_i + z_j)_{s;i}
  SShiftedComplexIndex,  // (z_j)_{s;t+i}
  InvSShifted,           // 1 / (z_j)_{s;i}
  RatioSShifted,         // (z_j)_{s;i} / (a z_j + b)_{s;i}
  NegIndex,              // (z_j)_{s;-i}
  InvNegIndex,           // 1 / (z_j)_{s;-i}
  RatioNegIndex,         // (a z_j + b)_{s;-i} / (z_j)_{s;-i}
  TwoSetSymmetric,       // (z_i + w_j)_{s;n-1}
  GammaShift,            // Gamma(z_j + i)
  BinomialElem,          // C(z_j, i)
  InvGamma,              // 1 / Gamma(z_j + i)
  InvBinomial,           // 1 / C(z_j, i)
  GammaRatio,            // Gamma(z_j + i) / Gamma(a z_j + b + i)
  BinomialRatio,         // C(z_j, i) / C(a z_j + b, i)
  GammaNegShift,         // Gamma(z_j - i)
  InvGammaNeg,           // 1 / Gamma(z_j - i)
  GammaRatioNeg,         // Gamma(a z_j + b - i) / Gamma(z_j - i)
  TwoSetGammaRatio,      // Gamma(z_i + w_j + n - 1) / Gamma(z_i + w_j)
  TwoSetBinomial,        // C(z_i + w_j, n - 1)
};

struct KindInfo {
  Kind kind;
  std::string_view name;
  bool exact;         // closed form and matrix are evaluable in exact arithmetic
  bool two_sets;      // takes a second node set w
  bool uses_shift;    // depends on s (the gamma/binomial kinds fix s = +-1)
  bool uses_ab;       // carries the affine parameters a, b
  bool uses_t;        // carries a complex index offset t
  bool uses_offsets;  // carries per-row offsets b_i
};

inline constexpr std::size_t kKindCount = 20;

std::span<const KindInfo, kKindCount> all_kinds();
const KindInfo& kind_info(Kind kind);
std::optional<Kind> parse_kind(std::string_view name);

/// Ordered node set z_0 .. z_{n-1}, n >= 1. Duplicates are allowed.
template <Field T>
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<T> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw DomainError("NodeSet: at least one node is required");
  }
  NodeSet(std::initializer_list<T> nodes) : NodeSet(std::vector<T>(nodes)) {}

  std::size_t size() const { return nodes_.size(); }
  const T& operator[](std::size_t j) const { return nodes_[j]; }
  std::span<const T> values() const { return nodes_; }
  auto begin() const { return nodes_.begin(); }
  auto end() const { return nodes_.end(); }

 private:
  std::vector<T> nodes_;
};

/// Declarative description of a determinant family. Parameters not used by
/// `kind` are ignored.
template <Field T>
struct DeterminantSpec {
  Kind kind = Kind::SShifted;
  T s = from_int<T>(0);
  T a = from_int<T>(1);
  T b = from_int<T>(0);
  Complex t{0.0, 0.0};
  std::vector<T> offsets;  // b_i, one per row
  std::vector<T> second;   // w_j for the two-set kinds
};

/// Dense square matrix, row-major.
template <class T>
class Matrix {
 public:
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_columns(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

 private:
  std::size_t n_;
  std::vector<T> data_;
};

/// Product of differences prod_{i<j} (z_j - z_i); 1 for a single node.
template <Field T>
T prod_diff(std::span<const T> nodes) {
  T acc = from_int<T>(1);
  for (std::size_t j = 1; j < nodes.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) acc *= nodes[j] - nodes[i];
  }
  return acc;
}
template <Field T>
T prod_diff(const NodeSet<T>& nodes) {
  return prod_diff(nodes.values());
}

/// (-1)^{n(n-1)/2}.
inline int alternating_sign(std::size_t n) { return parity_sign(static_cast<long>(n * (n - 1) / 2)); }

/// Eagerly validates the side conditions of the closed form for `spec`,
/// throwing PoleError that names the violated exclusion.
template <Field T>
void check_side_conditions(const DeterminantSpec<T>& spec, const NodeSet<T>& nodes);

/// Materializes the n x n element matrix of the family. A pole in an entry
/// raises PoleError carrying the (i, j) location.
template <Field T>
Matrix<T> build_matrix(const DeterminantSpec<T>& spec, const NodeSet<T>& nodes);

/// Right-hand side closed form of the family.
template <Field T>
T det_closed(const DeterminantSpec<T>& spec, const NodeSet<T>& nodes);

/// Determinant by LU factorization with partial (modulus) pivoting,
/// eliminating in long double.
Complex det_oracle(Matrix<Complex> m);

/// Pivoted LU on entries rebuilt in long double. Gamma entries split into a
/// per-column gamma factor times a rational product in the row index, so
/// only the product is rounded per entry. Pole conditions match build_matrix.
Complex det_oracle_extended(const DeterminantSpec<Complex>& spec, const NodeSet<Complex>& nodes);

/// Exact determinant by Bareiss fraction-free elimination.
Rational det_oracle(Matrix<Rational> m);

struct DetResult {
  std::optional<Complex> closed_form;
  std::optional<Complex> oracle;
  std::optional<double> residual;  // |closed - oracle| / |oracle|
};

enum class EvalMode { Both, ClosedOnly, OracleOnly };

DetResult evaluate(const DeterminantSpec<Complex>& spec, const NodeSet<Complex>& nodes,
                   EvalMode mode = EvalMode::Both);

struct ExactDetResult {
  std::optional<Rational> closed_form;
  std::optional<Rational> oracle;
};

ExactDetResult evaluate_exact(const DeterminantSpec<Rational>& spec, const NodeSet<Rational>& nodes,
                              EvalMode mode = EvalMode::Both);

/// prod Gamma(num_k) / prod Gamma(den_k) accumulated as a sum of log-gamma
/// terms. A numerator pole raises PoleError; a denominator pole yields 0.
Complex gamma_quotient(std::span<const Complex> num, std::span<const Complex> den);

}  // namespace shiftfact::det

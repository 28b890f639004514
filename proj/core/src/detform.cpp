#include "shiftfact/detform.hpp"

#include <algorithm>
#include <array>

#include "shiftfact/gamma.hpp"
#include "shiftfact/sfact.hpp"

namespace shiftfact::det {

namespace {

//                                         exact  two    shift  ab     t      offs
constexpr std::array<KindInfo, kKindCount> kKinds{{
    {Kind::SShifted, "SShifted", true, false, true, false, false, false},
    {Kind::SShiftedOffsets, "SShiftedOffsets", true, false, true, false, false, true},
    {Kind::SShiftedComplexIndex, "SShiftedComplexIndex", false, false, true, false, true, false},
    {Kind::InvSShifted, "InvSShifted", true, false, true, false, false, false},
    {Kind::RatioSShifted, "RatioSShifted", true, false, true, true, false, false},
    {Kind::NegIndex, "NegIndex", true, false, true, false, false, false},
    {Kind::InvNegIndex, "InvNegIndex", true, false, true, false, false, false},
    {Kind::RatioNegIndex, "RatioNegIndex", true, false, true, true, false, false},
    {Kind::TwoSetSymmetric, "TwoSetSymmetric", true, true, true, false, false, false},
    {Kind::GammaShift, "GammaShift", false, false, false, false, false, false},
    {Kind::BinomialElem, "BinomialElem", true, false, false, false, false, false},
    {Kind::InvGamma, "InvGamma", false, false, false, false, false, false},
    {Kind::InvBinomial, "InvBinomial", true, false, false, false, false, false},
    {Kind::GammaRatio, "GammaRatio", false, false, false, true, false, false},
    {Kind::BinomialRatio, "BinomialRatio", true, false, false, true, false, false},
    {Kind::GammaNegShift, "GammaNegShift", false, false, false, false, false, false},
    {Kind::InvGammaNeg, "InvGammaNeg", false, false, false, false, false, false},
    {Kind::GammaRatioNeg, "GammaRatioNeg", false, false, false, true, false, false},
    {Kind::TwoSetGammaRatio, "TwoSetGammaRatio", false, true, false, false, false, false},
    {Kind::TwoSetBinomial, "TwoSetBinomial", true, true, false, false, false, false},
}};

std::string node_label(std::size_t j) { return "z_" + std::to_string(j); }

template <Field T>
void require_nonzero(const T& v, const std::string& condition) {
  if (vanishes(v)) throw PoleError(to_complex(v), "side condition " + condition + " violated");
}

void require_not_pole(Complex x, const std::string& condition) {
  if (near_nonpositive_integer(x, kPoleTolerance)) {
    throw PoleError(x, "side condition " + condition + " violated");
  }
}

/// Exclusion x + k*step != 0 for k in [k_lo, k_hi].
template <Field T>
void require_progression_free(const T& x, const T& step, int k_lo, int k_hi,
                              const std::string& condition) {
  for (int k = k_lo; k <= k_hi; ++k) require_nonzero(T(x + from_int<T>(k) * step), condition);
}

/// Integer exclusion x not in {lo, ..., hi} for the binomial kinds.
template <Field T>
void require_not_in_range(const T& x, int lo, int hi, const std::string& condition) {
  for (int k = lo; k <= hi; ++k) require_nonzero(T(x - from_int<T>(k)), condition);
}

template <Field T>
T factorial_of(int n) {
  T acc = from_int<T>(1);
  for (int k = 2; k <= n; ++k) acc *= from_int<T>(k);
  return acc;
}

/// ((n-1)!)^n / (prod_{j<n} j!)^2, the two-set prefactor without its sign.
template <Field T>
T two_set_prefactor(int n, bool include_top) {
  T superfactorial = from_int<T>(1);
  for (int j = 0; j < n; ++j) superfactorial *= factorial_of<T>(j);
  T top = include_top ? ipow(factorial_of<T>(n - 1), n) : from_int<T>(1);
  return top / (superfactorial * superfactorial);
}

template <Field T>
void require_second_set(const DeterminantSpec<T>& spec, std::size_t n) {
  if (spec.second.size() != n) {
    throw DomainError(std::string(kind_info(spec.kind).name) + ": second node set must have " +
                      std::to_string(n) + " entries");
  }
}

template <Field T>
void require_offsets(const DeterminantSpec<T>& spec, std::size_t n) {
  if (spec.offsets.size() != n) {
    throw DomainError("SShiftedOffsets: offsets must have " + std::to_string(n) + " entries");
  }
}

[[noreturn]] void unsupported_exact(Kind kind) {
  throw UnsupportedCase(std::string(kind_info(kind).name) + " has no exact rational evaluation");
}

/// 1 / (x)_{s;-j} = (x - js)_{s;j}, entire in x.
template <Field T>
T inverse_negative(const T& x, const T& s, int j) {
  return sf_product(T(x - from_int<T>(j) * s), s, j);
}

/// 1 / x, raising PoleError when x vanishes.
template <Field T>
T checked_inverse(const T& x, const char* what) {
  if (vanishes(x)) throw PoleError(to_complex(x), std::string(what) + " vanishes");
  return from_int<T>(1) / x;
}

/// Element (i, j) for the kinds evaluable in either field.
template <Field T>
T exact_element(const DeterminantSpec<T>& spec, const NodeSet<T>& nodes, std::size_t i, std::size_t j) {
  const int ii = static_cast<int>(i);
  const int n = static_cast<int>(nodes.size());
  const T& z = nodes[j];
  switch (spec.kind) {
    case Kind::SShifted:
      return sf_product(z, spec.s, ii);
    case Kind::SShiftedOffsets:
      return sf_product(T(spec.offsets[i] + z), spec.s, ii);
    case Kind::InvSShifted:
      return checked_inverse(sf_product(z, spec.s, ii), "(z_j)_{s;i}");
    case Kind::RatioSShifted:
      return sf_product(z, spec.s, ii) *
             checked_inverse(sf_product(T(spec.a * z + spec.b), spec.s, ii), "(a z_j + b)_{s;i}");
    case Kind::NegIndex:
      return sf_negative(z, spec.s, ii);
    case Kind::InvNegIndex:
      return sf_product(T(z - spec.s), T(-spec.s), ii);
    case Kind::RatioNegIndex:
      return sf_negative(T(spec.a * z + spec.b), spec.s, ii) * sf_product(T(z - spec.s), T(-spec.s), ii);
    case Kind::TwoSetSymmetric:
      return sf_product(T(nodes[i] + spec.second[j]), spec.s, n - 1);
    case Kind::BinomialElem:
      return binomial(z, ii);
    case Kind::InvBinomial:
      return checked_inverse(binomial(z, ii), "C(z_j, i)");
    case Kind::BinomialRatio:
      return binomial(z, ii) * checked_inverse(binomial(T(spec.a * z + spec.b), ii), "C(a z_j + b, i)");
    case Kind::TwoSetBinomial:
      return binomial(T(nodes[i] + spec.second[j]), n - 1);
    default:
      unsupported_exact(spec.kind);
  }
}

Complex gamma_element(const DeterminantSpec<Complex>& spec, const NodeSet<Complex>& nodes, std::size_t i,
                      std::size_t j) {
  const double di = static_cast<double>(i);
  const double n1 = static_cast<double>(nodes.size()) - 1.0;
  const Complex z = nodes[j];
  switch (spec.kind) {
    case Kind::SShiftedComplexIndex:
      return sf_general(z, spec.s, spec.t + di);
    case Kind::GammaShift:
      return complex_gamma(z + di);
    case Kind::InvGamma:
      return reciprocal_gamma(z + di);
    case Kind::GammaRatio: {
      const std::array<Complex, 1> num{z + di};
      const std::array<Complex, 1> den{spec.a * z + spec.b + di};
      return gamma_quotient(num, den);
    }
    case Kind::GammaNegShift:
      return complex_gamma(z - di);
    case Kind::InvGammaNeg:
      return reciprocal_gamma(z - di);
    case Kind::GammaRatioNeg: {
      const std::array<Complex, 1> num{spec.a * z + spec.b - di};
      const std::array<Complex, 1> den{z - di};
      return gamma_quotient(num, den);
    }
    case Kind::TwoSetGammaRatio: {
      const Complex x = nodes[i] + spec.second[j];
      const std::array<Complex, 1> num{x + n1};
      const std::array<Complex, 1> den{x};
      return gamma_quotient(num, den);
    }
    default:
      return exact_element(spec, nodes, i, j);
  }
}

template <Field T>
T closed_exact(const DeterminantSpec<T>& spec, const NodeSet<T>& nodes) {
  const std::size_t n = nodes.size();
  const int n1 = static_cast<int>(n) - 1;
  const T delta = prod_diff(nodes);
  const T sign = from_int<T>(alternating_sign(n));
  const T one = from_int<T>(1);
  T acc = one;

  switch (spec.kind) {
    case Kind::SShifted:
    case Kind::SShiftedOffsets:
    case Kind::InvNegIndex:
      return delta;
    case Kind::InvSShifted:
      for (const T& z : nodes) acc *= sf_product(z, spec.s, n1);
      return sign * delta / acc;
    case Kind::RatioSShifted:
      for (std::size_t j = 0; j < n; ++j) {
        const int jj = static_cast<int>(j);
        const T base = spec.b + from_int<T>(n1 - jj) * (one - spec.a) * spec.s;
        acc *= sf_product(base, spec.s, jj) / sf_product(T(spec.a * nodes[j] + spec.b), spec.s, n1);
      }
      return acc * delta;
    case Kind::NegIndex:
      for (const T& z : nodes) acc *= sf_negative(z, spec.s, n1);
      return sign * acc * delta;
    case Kind::RatioNegIndex:
      for (std::size_t j = 0; j < n; ++j) {
        const int jj = static_cast<int>(j);
        const T base = spec.b + spec.s + from_int<T>(static_cast<long>(n) - jj) * (spec.a - one) * spec.s;
        acc *= sf_negative(T(spec.a * nodes[j] + spec.b), spec.s, n1) * inverse_negative(base, spec.s, jj);
      }
      return acc * delta;
    case Kind::TwoSetSymmetric: {
      const T delta_w = prod_diff(std::span<const T>(spec.second));
      return sign * two_set_prefactor<T>(static_cast<int>(n), true) * delta * delta_w;
    }
    case Kind::BinomialElem:
      for (std::size_t j = 0; j < n; ++j) acc *= factorial_of<T>(static_cast<int>(j));
      return delta / acc;
    case Kind::InvBinomial:
      for (std::size_t j = 0; j < n; ++j) {
        acc *= factorial_of<T>(static_cast<int>(j)) / falling(nodes[j], n1);
      }
      return sign * acc * delta;
    case Kind::BinomialRatio:
      for (std::size_t j = 0; j < n; ++j) {
        const int jj = static_cast<int>(j);
        const T base = spec.b - from_int<T>(n1 - jj) * (one - spec.a);
        acc *= falling(base, jj) / falling(T(spec.a * nodes[j] + spec.b), n1);
      }
      return acc * delta;
    case Kind::TwoSetBinomial: {
      const T delta_w = prod_diff(std::span<const T>(spec.second));
      return sign * two_set_prefactor<T>(static_cast<int>(n), false) * delta * delta_w;
    }
    default:
      unsupported_exact(spec.kind);
  }
}

Complex closed_complex(const DeterminantSpec<Complex>& spec, const NodeSet<Complex>& nodes) {
  const std::size_t n = nodes.size();
  const double n1 = static_cast<double>(n) - 1.0;
  const Complex delta = prod_diff(nodes);
  const double sign = alternating_sign(n);
  std::vector<Complex> num;
  std::vector<Complex> den;
  num.reserve(n);
  den.reserve(n);

  switch (spec.kind) {
    case Kind::SShiftedComplexIndex: {
      Complex acc = 1.0;
      for (const Complex& z : nodes) acc *= sf_general(z, spec.s, spec.t);
      return acc * delta;
    }
    case Kind::GammaShift:
      num.assign(nodes.begin(), nodes.end());
      return gamma_quotient(num, den) * delta;
    case Kind::InvGamma:
      for (const Complex& z : nodes) den.push_back(z + n1);
      return sign * gamma_quotient(num, den) * delta;
    case Kind::GammaRatio: {
      Complex rising_part = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double dj = static_cast<double>(j);
        rising_part *= rising(spec.b + (n1 - dj) * (1.0 - spec.a), static_cast<int>(j));
        num.push_back(nodes[j]);
        den.push_back(spec.a * nodes[j] + spec.b + n1);
      }
      return rising_part * gamma_quotient(num, den) * delta;
    }
    case Kind::GammaNegShift:
      for (const Complex& z : nodes) num.push_back(z - n1);
      return sign * gamma_quotient(num, den) * delta;
    case Kind::InvGammaNeg:
      den.assign(nodes.begin(), nodes.end());
      return gamma_quotient(num, den) * delta;
    case Kind::GammaRatioNeg: {
      Complex inverse_part = 1.0;
      const Complex one(1.0, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        const double dj = static_cast<double>(j);
        const Complex base = spec.b + 1.0 + (static_cast<double>(n) - dj) * (spec.a - 1.0);
        inverse_part *= inverse_negative(base, one, static_cast<int>(j));
        num.push_back(spec.a * nodes[j] + spec.b - n1);
        den.push_back(nodes[j]);
      }
      return inverse_part * gamma_quotient(num, den) * delta;
    }
    case Kind::TwoSetGammaRatio: {
      const Complex delta_w = prod_diff(std::span<const Complex>(spec.second));
      return sign * two_set_prefactor<Complex>(static_cast<int>(n), true) * delta * delta_w;
    }
    default:
      return closed_exact(spec, nodes);
  }
}

}  // namespace

std::span<const KindInfo, kKindCount> all_kinds() { return kKinds; }

const KindInfo& kind_info(Kind kind) { return kKinds[static_cast<std::size_t>(kind)]; }

std::optional<Kind> parse_kind(std::string_view name) {
  for (const auto& info : kKinds) {
    if (info.name == name) return info.kind;
  }
  return std::nullopt;
}

Complex gamma_quotient(std::span<const Complex> num, std::span<const Complex> den) {
  for (const Complex& x : num) {
    if (near_nonpositive_integer(x, kPoleTolerance)) throw PoleError(x, "gamma numerator at a pole");
  }
  for (const Complex& x : den) {
    if (near_nonpositive_integer(x, kPoleTolerance)) return 0.0;
  }
  Complex log_sum = 0.0;
  for (const Complex& x : num) log_sum += complex_log_gamma(x);
  for (const Complex& x : den) log_sum -= complex_log_gamma(x);
  return std::exp(log_sum);
}

template <Field T>
void check_side_conditions(const DeterminantSpec<T>& spec, const NodeSet<T>& nodes) {
  const std::size_t n = nodes.size();
  const int n1 = static_cast<int>(n) - 1;
  const T& s = spec.s;
  const auto& info = kind_info(spec.kind);
  if (info.two_sets) require_second_set(spec, n);
  if (info.uses_offsets) require_offsets(spec, n);
  if constexpr (is_exact_v<T>) {
    if (!info.exact) unsupported_exact(spec.kind);
  }

  for (std::size_t j = 0; j < n; ++j) {
    const T& z = nodes[j];
    const T az_b = spec.a * z + spec.b;
    const std::string zj = node_label(j);
    switch (spec.kind) {
      case Kind::InvSShifted:
        require_progression_free(z, s, 0, n1 - 1, zj + " != 0, -s, ..., -(n-2)s");
        break;
      case Kind::RatioSShifted:
        require_progression_free(az_b, s, 0, n1 - 1, "a " + zj + " + b != 0, -s, ..., -(n-2)s");
        break;
      case Kind::NegIndex:
        require_progression_free(z, T(-s), 1, n1, zj + " != s, 2s, ..., (n-1)s");
        break;
      case Kind::RatioNegIndex:
        require_progression_free(az_b, T(-s), 1, n1, "a " + zj + " + b != s, 2s, ..., (n-1)s");
        break;
      case Kind::InvBinomial:
        require_not_in_range(z, 0, n1 - 1, zj + " != 0, 1, ..., n-2");
        break;
      case Kind::BinomialRatio:
        require_not_in_range(az_b, 0, n1 - 1, "a " + zj + " + b != 0, 1, ..., n-2");
        break;
      default:
        break;
    }
    if constexpr (!is_exact_v<T>) {
      switch (spec.kind) {
        case Kind::SShiftedComplexIndex:
          if (s != Complex(0.0, 0.0) && !is_exact_integer(spec.t)) {
            require_not_pole(z / s, zj + "/s != 0, -1, -2, ...");
            for (int i = 0; i <= n1; ++i) {
              require_not_pole(z / s + spec.t + static_cast<double>(i), zj + "/s + t + i != 0, -1, -2, ...");
            }
          }
          break;
        case Kind::GammaShift:
        case Kind::GammaRatio:
          require_not_pole(z, zj + " != 0, -1, -2, ...");
          break;
        case Kind::GammaNegShift:
          require_not_pole(z - static_cast<double>(n1), zj + " - (n-1) != 0, -1, -2, ...");
          break;
        case Kind::GammaRatioNeg:
          require_not_pole(az_b - static_cast<double>(n1), "a " + zj + " + b != n-1, n-2, ...");
          break;
        case Kind::TwoSetGammaRatio:
          for (std::size_t k = 0; k < n; ++k) {
            require_not_pole(z + spec.second[k], "z_i + w_j != 0, -1, -2, ...");
          }
          break;
        default:
          break;
      }
    }
  }
}

template <Field T>
Matrix<T> build_matrix(const DeterminantSpec<T>& spec, const NodeSet<T>& nodes) {
  const std::size_t n = nodes.size();
  const auto& info = kind_info(spec.kind);
  if (info.two_sets) require_second_set(spec, n);
  if (info.uses_offsets) require_offsets(spec, n);
  Matrix<T> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      try {
        if constexpr (is_exact_v<T>) {
          m(i, j) = exact_element(spec, nodes, i, j);
        } else {
          m(i, j) = gamma_element(spec, nodes, i, j);
        }
      } catch (const PoleError& e) {
        throw PoleError(e.location(), "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                          "): " + e.context());
      }
    }
  }
  return m;
}

template <Field T>
T det_closed(const DeterminantSpec<T>& spec, const NodeSet<T>& nodes) {
  check_side_conditions(spec, nodes);
  if constexpr (is_exact_v<T>) {
    return closed_exact(spec, nodes);
  } else {
    return closed_complex(spec, nodes);
  }
}

template void check_side_conditions(const DeterminantSpec<Complex>&, const NodeSet<Complex>&);
template void check_side_conditions(const DeterminantSpec<Rational>&, const NodeSet<Rational>&);
template Matrix<Complex> build_matrix(const DeterminantSpec<Complex>&, const NodeSet<Complex>&);
template Matrix<Rational> build_matrix(const DeterminantSpec<Rational>&, const NodeSet<Rational>&);
template Complex det_closed(const DeterminantSpec<Complex>&, const NodeSet<Complex>&);
template Rational det_closed(const DeterminantSpec<Rational>&, const NodeSet<Rational>&);

DetResult evaluate(const DeterminantSpec<Complex>& spec, const NodeSet<Complex>& nodes, EvalMode mode) {
  DetResult result;
  if (mode != EvalMode::OracleOnly) result.closed_form = det_closed(spec, nodes);
  if (mode != EvalMode::ClosedOnly) result.oracle = det_oracle_extended(spec, nodes);
  if (result.closed_form && result.oracle && *result.oracle != Complex(0.0, 0.0)) {
    result.residual = std::abs(*result.closed_form - *result.oracle) / std::abs(*result.oracle);
  }
  return result;
}

ExactDetResult evaluate_exact(const DeterminantSpec<Rational>& spec, const NodeSet<Rational>& nodes,
                              EvalMode mode) {
  ExactDetResult result;
  if (mode != EvalMode::OracleOnly) result.closed_form = det_closed(spec, nodes);
  if (mode != EvalMode::ClosedOnly) result.oracle = det_oracle(build_matrix(spec, nodes));
  return result;
}

}  // namespace shiftfact::det

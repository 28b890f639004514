#include "shiftfact/detform.hpp"
#include "shiftfact/errors.hpp"
#include "shiftfact/sfact.hpp"
#include "shiftfact/triangular.hpp"
#include "verify_internal.hpp"

namespace shiftfact::verify {

namespace {

using det::DeterminantSpec;
using det::Kind;
using det::KindInfo;
using det::NodeSet;
using detail::Check;
using detail::compare;
using detail::gamma_safe;

constexpr double kOracleTol = 1e-8;
constexpr double kNodeRadius = 4.0;
constexpr double kNodeSeparation = 0.1;
constexpr double kParamRadius = 1.0;
constexpr double kFactorGuard = 0.05;
constexpr int kMinOrder = 2;
constexpr int kMaxOrder = 8;
constexpr int kMaxExactOrder = 6;
constexpr int kExactTrialsPerOrder = 20;

struct Context {
  Rng& rng;
  int trials;
  std::vector<CheckResult>& out;
};

/// n nodes in |z| <= kNodeRadius, pairwise at least kNodeSeparation apart.
std::optional<std::vector<Complex>> separated_nodes(Rng& rng, int n) {
  std::vector<Complex> nodes;
  for (int attempt = 0; attempt < detail::kMaxResample && static_cast<int>(nodes.size()) < n; ++attempt) {
    const Complex z = rng.in_disc(kNodeRadius);
    const bool clear = std::all_of(nodes.begin(), nodes.end(),
                                   [&](const Complex& w) { return std::abs(z - w) >= kNodeSeparation; });
    if (clear) nodes.push_back(z);
  }
  if (static_cast<int>(nodes.size()) < n) return std::nullopt;
  return nodes;
}

/// Values that must stay away from zero (factor denominators) and gamma
/// arguments that must stay away from poles, for one sampled instance.
struct Sensitive {
  std::vector<Complex> zeros;
  std::vector<Complex> gammas;

  bool admissible() const {
    return std::all_of(zeros.begin(), zeros.end(), [](Complex v) { return std::abs(v) >= kFactorGuard; }) &&
           std::all_of(gammas.begin(), gammas.end(), [](Complex v) { return gamma_safe(v); });
  }
};

Sensitive sensitive_values(const DeterminantSpec<Complex>& spec, const std::vector<Complex>& nodes) {
  Sensitive out;
  const int n = static_cast<int>(nodes.size());
  const Complex s = spec.s;
  for (int j = 0; j < n; ++j) {
    const Complex z = nodes[static_cast<std::size_t>(j)];
    const Complex azb = spec.a * z + spec.b;
    for (int k = 0; k < n; ++k) {
      const double dk = static_cast<double>(k);
      switch (spec.kind) {
        case Kind::InvSShifted:
          if (k <= n - 2) out.zeros.push_back(z + dk * s);
          break;
        case Kind::RatioSShifted:
          if (k <= n - 2) out.zeros.push_back(azb + dk * s);
          break;
        case Kind::NegIndex:
          if (k >= 1) out.zeros.push_back(z - dk * s);
          break;
        case Kind::RatioNegIndex:
          if (k >= 1) out.zeros.push_back(azb - dk * s);
          break;
        case Kind::InvBinomial:
          if (k <= n - 2) out.zeros.push_back(z - dk);
          break;
        case Kind::BinomialRatio:
          if (k <= n - 2) out.zeros.push_back(azb - dk);
          break;
        case Kind::SShiftedComplexIndex:
          if (k == 0) out.gammas.push_back(z / s);
          out.gammas.push_back(z / s + spec.t + dk);
          break;
        case Kind::GammaShift:
        case Kind::InvGamma:
          out.gammas.push_back(z + dk);
          break;
        case Kind::GammaRatio:
          out.gammas.push_back(z + dk);
          out.gammas.push_back(azb + dk);
          break;
        case Kind::GammaNegShift:
        case Kind::InvGammaNeg:
          out.gammas.push_back(z - dk);
          break;
        case Kind::GammaRatioNeg:
          out.gammas.push_back(z - dk);
          out.gammas.push_back(azb - dk);
          break;
        case Kind::TwoSetGammaRatio:
          for (int m = 0; m < n; ++m) {
            out.gammas.push_back(z + spec.second[static_cast<std::size_t>(k)] + static_cast<double>(m));
          }
          break;
        default:
          break;
      }
    }
  }
  if (kind_info(spec.kind).uses_shift) out.zeros.push_back(s);
  return out;
}

/// Draws parameters for `info`. s, a, b and t are uniform on the unit disc.
DeterminantSpec<Complex> complex_spec(Rng& rng, const KindInfo& info, int n) {
  DeterminantSpec<Complex> spec;
  spec.kind = info.kind;
  spec.s = info.uses_shift ? rng.in_disc(kParamRadius) : Complex(1.0, 0.0);
  if (info.uses_ab) {
    spec.a = rng.in_disc(kParamRadius);
    spec.b = rng.in_disc(kParamRadius);
  }
  if (info.uses_t) spec.t = rng.in_disc(kParamRadius);
  if (info.uses_offsets) {
    for (int i = 0; i < n; ++i) spec.offsets.push_back(rng.in_disc(2.0));
  }
  return spec;
}

DeterminantSpec<Rational> rational_spec(Rng& rng, const KindInfo& info, int n) {
  DeterminantSpec<Rational> spec;
  spec.kind = info.kind;
  // One draw in five exercises the s = 0 (power-function) limit.
  if (info.uses_shift) spec.s = rng.integer(0, 4) == 0 ? Rational(0) : rng.small_rational();
  else spec.s = Rational(1);
  if (info.uses_ab) {
    spec.a = rng.small_rational();
    spec.b = rng.small_rational();
  }
  if (info.uses_offsets) {
    for (int i = 0; i < n; ++i) spec.offsets.push_back(rng.small_rational());
  }
  if (info.two_sets) {
    for (int i = 0; i < n; ++i) spec.second.push_back(rng.small_rational());
  }
  return spec;
}

std::string describe(const DeterminantSpec<Complex>& spec, const std::vector<Complex>& nodes) {
  std::string out = "n=" + std::to_string(nodes.size()) + " s=" + to_string(spec.s);
  const auto& info = kind_info(spec.kind);
  if (info.uses_ab) out += " a=" + to_string(spec.a) + " b=" + to_string(spec.b);
  if (info.uses_t) out += " t=" + to_string(spec.t);
  out += " z=[";
  for (std::size_t j = 0; j < nodes.size(); ++j) out += (j ? "," : "") + to_string(nodes[j]);
  return out + "]";
}

std::string describe(const DeterminantSpec<Rational>& spec, const std::vector<Rational>& nodes) {
  std::string out = "n=" + std::to_string(nodes.size()) + " s=" + to_string(spec.s);
  if (kind_info(spec.kind).uses_ab) out += " a=" + to_string(spec.a) + " b=" + to_string(spec.b);
  out += " z=[";
  for (std::size_t j = 0; j < nodes.size(); ++j) out += (j ? "," : "") + to_string(nodes[j]);
  return out + "]";
}

/// One admissible complex instance, or nullopt to redraw.
struct ComplexInstance {
  DeterminantSpec<Complex> spec;
  std::vector<Complex> nodes;
};

std::optional<ComplexInstance> draw_complex(Rng& rng, const KindInfo& info, int n) {
  auto nodes = separated_nodes(rng, n);
  if (!nodes) return std::nullopt;
  auto spec = complex_spec(rng, info, n);
  if (info.two_sets) {
    auto second = separated_nodes(rng, n);
    if (!second) return std::nullopt;
    spec.second = *second;
  }
  if (!sensitive_values(spec, *nodes).admissible()) return std::nullopt;
  return ComplexInstance{std::move(spec), std::move(*nodes)};
}

void oracle_checks(Context& ctx) {
  for (const KindInfo& info : det::all_kinds()) {
    Check check("oracle." + std::string(info.name), "det_oracle", kOracleTol);
    for (int n = kMinOrder; n <= kMaxOrder; ++n) {
      for (int k = 0; k < ctx.trials; ++k) {
        detail::run_trial(check, [&] {
          auto inst = draw_complex(ctx.rng, info, n);
          if (!inst) return false;
          const NodeSet<Complex> nodes(inst->nodes);
          Complex closed;
          Complex oracle;
          try {
            closed = det::det_closed(inst->spec, nodes);
            oracle = det::det_oracle_extended(inst->spec, nodes);
          } catch (const PoleError&) {
            return false;
          }
          compare(check, closed, oracle, [&] { return describe(inst->spec, inst->nodes); });
          return true;
        });
      }
    }
    ctx.out.push_back(check.result());
  }
}

void exact_oracle_checks(Context& ctx) {
  for (const KindInfo& info : det::all_kinds()) {
    if (!info.exact) continue;
    Check check = Check::exact("oracle." + std::string(info.name) + ".exact", "det_oracle");
    for (int n = kMinOrder; n <= kMaxExactOrder; ++n) {
      for (int k = 0; k < kExactTrialsPerOrder; ++k) {
        detail::run_trial(check, [&] {
          std::vector<Rational> z;
          for (int j = 0; j < n; ++j) z.push_back(ctx.rng.small_rational());
          const auto spec = rational_spec(ctx.rng, info, n);
          const NodeSet<Rational> nodes(z);
          Rational closed;
          Rational oracle;
          try {
            closed = det::det_closed(spec, nodes);
            oracle = det::det_oracle(det::build_matrix(spec, nodes));
          } catch (const PoleError&) {
            return false;
          }
          compare(check, closed, oracle, [&] { return describe(spec, z); });
          return true;
        });
      }
    }
    ctx.out.push_back(check.result());
  }
}

/// Swapping two nodes negates the closed form; a repeated node zeroes it.
void structural_checks(Context& ctx) {
  Check swap("closed_form.antisymmetry", "det_properties", 1e-10);
  Check repeat = Check::exact("closed_form.coincident_nodes", "det_properties");
  for (const KindInfo& info : det::all_kinds()) {
    for (int k = 0; k < ctx.trials; ++k) {
      const int n = ctx.rng.integer(kMinOrder, kMaxExactOrder);
      detail::run_trial(swap, [&] {
        auto inst = draw_complex(ctx.rng, info, n);
        if (!inst) return false;
        auto swapped = inst->nodes;
        const int p = ctx.rng.integer(0, n - 1);
        const int q = (p + ctx.rng.integer(1, n - 1)) % n;
        std::swap(swapped[static_cast<std::size_t>(p)], swapped[static_cast<std::size_t>(q)]);
        Complex before;
        Complex after;
        try {
          before = det::det_closed(inst->spec, NodeSet<Complex>(inst->nodes));
          after = det::det_closed(inst->spec, NodeSet<Complex>(swapped));
        } catch (const PoleError&) {
          return false;
        }
        compare(swap, Complex(-after), before,
                [&] { return std::string(info.name) + " " + describe(inst->spec, inst->nodes); });
        return true;
      });
      detail::run_trial(repeat, [&] {
        auto inst = draw_complex(ctx.rng, info, n);
        if (!inst) return false;
        inst->nodes[1] = inst->nodes[0];
        Complex closed;
        try {
          closed = det::det_closed(inst->spec, NodeSet<Complex>(inst->nodes));
        } catch (const PoleError&) {
          return false;
        }
        repeat.equal(closed == Complex(0.0, 0.0), [&] {
          return std::string(info.name) + " " + describe(inst->spec, inst->nodes) + ": " + to_string(closed);
        });
        return true;
      });
    }
  }
  ctx.out.push_back(swap.result());
  ctx.out.push_back(repeat.result());
}

/// Product-of-differences transformation rules under affine, inverse and
/// Moebius maps, and its value on an arithmetic progression.
void vandermonde_checks(Context& ctx) {
  Check check = Check::exact("prod_diff.transformations.exact", "det_properties");
  for (int k = 0; k < ctx.trials; ++k) {
    detail::run_trial(check, [&] {
      const int n = ctx.rng.integer(1, kMaxExactOrder);
      const Rational a = ctx.rng.small_rational();
      const Rational b = ctx.rng.small_rational();
      std::vector<Rational> z;
      for (int j = 0; j < n; ++j) z.push_back(ctx.rng.small_rational());
      std::vector<Rational> affine, inverse, moebius, progression;
      Rational prod_z(1), prod_affine(1), factorials(1);
      for (int j = 0; j < n; ++j) {
        const Rational& x = z[static_cast<std::size_t>(j)];
        const Rational ax_b = b + a * x;
        if (x.is_zero() || ax_b.is_zero()) return false;
        affine.push_back(ax_b);
        inverse.push_back(Rational(1) / x);
        moebius.push_back(x / ax_b);
        progression.push_back(b + a * Rational(j));
        prod_z *= ipow(x, n - 1);
        prod_affine *= ipow(ax_b, n - 1);
        factorials *= Rational(exact_factorial(j));
      }
      const int pairs = n * (n - 1) / 2;
      const Rational delta = det::prod_diff(std::span<const Rational>(z));
      const Rational sign(parity_sign(pairs));
      const bool ok = det::prod_diff(std::span<const Rational>(affine)) == ipow(a, pairs) * delta &&
                      det::prod_diff(std::span<const Rational>(inverse)) == sign * delta / prod_z &&
                      det::prod_diff(std::span<const Rational>(moebius)) == ipow(b, pairs) * delta / prod_affine &&
                      det::prod_diff(std::span<const Rational>(progression)) == ipow(a, pairs) * factorials;
      check.equal(ok, [&] { return "a=" + to_string(a) + " b=" + to_string(b) + " n=" + std::to_string(n); });
      return true;
    });
  }
  ctx.out.push_back(check.result());
}

/// The s-shifted Vandermonde matrix has the same determinant for every s.
void s_independence_checks(Context& ctx) {
  constexpr int kShifts = 5;
  Check check("oracle.s_independence", "det_properties", 1e-9);
  const KindInfo& info = kind_info(Kind::SShifted);
  for (int k = 0; k < ctx.trials; ++k) {
    const int n = ctx.rng.integer(kMinOrder, kMaxExactOrder);
    detail::run_trial(check, [&] {
      auto nodes = separated_nodes(ctx.rng, n);
      if (!nodes) return false;
      const NodeSet<Complex> set(*nodes);
      auto spec = complex_spec(ctx.rng, info, n);
      const Complex first = det::det_oracle(det::build_matrix(spec, set));
      for (int m = 1; m < kShifts; ++m) {
        spec.s = ctx.rng.in_disc(kParamRadius);
        compare(check, det::det_oracle(det::build_matrix(spec, set)), first,
                [&] { return describe(spec, *nodes); });
      }
      return true;
    });
  }
  ctx.out.push_back(check.result());
}

/// Rows built from lower-triangular combinations of shifted factorials scale
/// the base determinant by the product of the diagonal coefficients.
void alternant_checks(Context& ctx) {
  constexpr int kMaxAlternant = 5;
  constexpr double kMinDiagonal = 0.5;
  for (const bool negative : {false, true}) {
    Check check(negative ? "alternant.negative_index" : "alternant.positive_index", "det_properties", kOracleTol);
    const KindInfo& info = kind_info(negative ? Kind::NegIndex : Kind::SShifted);
    for (int k = 0; k < ctx.trials; ++k) {
      const int n = ctx.rng.integer(kMinOrder, kMaxAlternant);
      detail::run_trial(check, [&] {
        auto inst = draw_complex(ctx.rng, info, n);
        if (!inst) return false;
        const auto size = static_cast<std::size_t>(n);
        det::Matrix<Complex> m(size);
        Complex lambda(1.0, 0.0);
        for (int i = 0; i < n; ++i) {
          std::vector<Complex> c(static_cast<std::size_t>(i) + 1);
          for (auto& ck : c) ck = ctx.rng.in_disc(1.0);
          while (std::abs(c.back()) < kMinDiagonal) c.back() = ctx.rng.in_disc(1.0);
          lambda *= c.back();
          for (int j = 0; j < n; ++j) {
            const Complex z = inst->nodes[static_cast<std::size_t>(j)];
            Complex entry(0.0, 0.0);
            for (int q = 0; q <= i; ++q) {
              const Complex base = negative ? sf_negative(z, inst->spec.s, q) : sf_product(z, inst->spec.s, q);
              entry += c[static_cast<std::size_t>(q)] * base;
            }
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = entry;
          }
        }
        const Complex base = det::det_closed(inst->spec, NodeSet<Complex>(inst->nodes));
        compare(check, det::det_oracle(m), lambda * base, [&] { return describe(inst->spec, inst->nodes); });
        return true;
      });
    }
    ctx.out.push_back(check.result());
  }
}

/// Rows indexed t + i and t - i around a complex index t, with every entry
/// taken from the gamma-ratio evaluation.
void complex_index_checks(Context& ctx) {
  constexpr int kMaxComplexOrder = 5;
  const KindInfo& info = kind_info(Kind::SShiftedComplexIndex);
  for (const bool negative : {false, true}) {
    Check check(negative ? "complex_index.negative_shift" : "complex_index.shift", "det_properties", kOracleTol);
    for (int k = 0; k < ctx.trials; ++k) {
      const int n = ctx.rng.integer(kMinOrder, kMaxComplexOrder);
      detail::run_trial(check, [&] {
        auto nodes = separated_nodes(ctx.rng, n);
        if (!nodes) return false;
        const auto spec = complex_spec(ctx.rng, info, n);
        const Complex s = spec.s;
        const Complex t = spec.t;
        if (std::abs(s) < kFactorGuard) return false;
        Sensitive guard;
        std::vector<Complex> moved;
        for (const Complex& z : *nodes) {
          guard.gammas.push_back(z / s);
          for (int i = 0; i < n; ++i) guard.gammas.push_back(z / s + t + (negative ? -1.0 : 1.0) * i);
          moved.push_back(z + t * s);
          for (int i = 1; i < n; ++i) guard.zeros.push_back(moved.back() - static_cast<double>(i) * s);
        }
        if (!guard.admissible()) return false;
        const auto size = static_cast<std::size_t>(n);
        det::Matrix<Complex> m(size);
        Complex prefactor(1.0, 0.0);
        for (std::size_t j = 0; j < size; ++j) {
          const Complex z = (*nodes)[j];
          prefactor *= sf_general(z, s, t);
          for (std::size_t i = 0; i < size; ++i) {
            const double di = static_cast<double>(i);
            m(i, j) = sf_general(z, s, negative ? t - di : t + di);
          }
        }
        Complex base;
        if (negative) {
          DeterminantSpec<Complex> neg;
          neg.kind = Kind::NegIndex;
          neg.s = s;
          base = det::det_closed(neg, NodeSet<Complex>(moved));
        } else {
          base = det::prod_diff(std::span<const Complex>(*nodes));
        }
        compare(check, det::det_oracle(m), prefactor * base, [&] { return describe(spec, *nodes); });
        return true;
      });
    }
    ctx.out.push_back(check.result());
  }
}

/// Two reorderings of products of shifted factorials that the closed forms
/// rely on.
template <Field T>
void rearrangement_checks(Context& ctx) {
  constexpr int kMaxRearrangement = 8;
  const std::string suffix = is_exact_v<T> ? ".exact" : "";
  auto make = [&](const std::string& name) {
    return is_exact_v<T> ? Check::exact(name + suffix, "det_properties") : Check(name, "det_properties", 1e-10);
  };
  Check affine = make("rearrangement.affine");
  Check scaled = make("rearrangement.scaled_shift");
  auto far_from_zero = [](const T& v) {
    if constexpr (is_exact_v<T>) return !v.is_zero();
    else return std::abs(v) >= kFactorGuard;
  };
  for (int k = 0; k < ctx.trials; ++k) {
    const int n = ctx.rng.integer(1, kMaxRearrangement);
    detail::run_trial(affine, [&] {
      const T s = detail::draw<T>(ctx.rng, 1.0);
      const T b = detail::draw<T>(ctx.rng, 2.0);
      for (int q = -1; q <= 2 * n; ++q) {
        if (!far_from_zero(b + from_int<T>(q) * s)) return false;
      }
      T lhs = from_int<T>(1);
      T rhs = from_int<T>(1);
      for (int j = 0; j < n; ++j) {
        const T bj = b + from_int<T>(j) * s;
        lhs *= sf_product(T(bj - s), s, j) * sf_product(bj, s, j);
        rhs *= sf_product(bj, s, n - 1);
      }
      compare(affine, lhs, rhs,
              [&] { return "n=" + std::to_string(n) + " s=" + to_string(s) + " b=" + to_string(b); });
      return true;
    });
    detail::run_trial(scaled, [&] {
      const T s = detail::draw<T>(ctx.rng, 1.0);
      const T a = detail::draw<T>(ctx.rng, 1.0);
      const T b = detail::draw<T>(ctx.rng, 2.0);
      const T r = (from_int<T>(1) - a) * s;
      T lhs = from_int<T>(1);
      T rhs = from_int<T>(1);
      for (int j = 0; j < n; ++j) {
        const T steps = from_int<T>(n - 1 - j);
        for (int m = 0; m < j; ++m) {
          if (!far_from_zero(b + steps * r + from_int<T>(m) * s)) return false;
          if (!far_from_zero(b + steps * s + from_int<T>(m) * r)) return false;
        }
        lhs *= sf_product(T(b + steps * r), s, j);
        rhs *= sf_product(T(b + steps * s), r, j);
      }
      compare(scaled, lhs, rhs, [&] {
        return "n=" + std::to_string(n) + " s=" + to_string(s) + " a=" + to_string(a) + " b=" + to_string(b);
      });
      return true;
    });
  }
  ctx.out.push_back(affine.result());
  ctx.out.push_back(scaled.result());
}

template <Field T>
bool triangular_admissible(det::TriangularKind kind, const det::TriangularParams<T>& p, int i, int j) {
  if constexpr (is_exact_v<T>) {
    return true;
  } else {
    if (std::abs(p.s) < kFactorGuard) return false;
    const Complex base = kind == det::TriangularKind::Lemma3Affine ? p.d : p.b;
    if (kind == det::TriangularKind::Lemma1Affine) return true;
    const int m_max = std::max(2 * i - 2, i + j - 1);
    for (int m = 0; m <= m_max; ++m) {
      if (std::abs(base + static_cast<double>(m) * p.s) < kFactorGuard) return false;
    }
    return true;
  }
}

template <Field T>
void triangular_checks(Context& ctx, det::TriangularKind kind) {
  constexpr int kMaxIndex = 6;
  constexpr int kDraws = 50;
  const std::string name = "triangular." + std::string(det::triangular_kind_name(kind));
  Check check = is_exact_v<T> ? Check::exact(name + ".exact", "triangular") : Check(name, "triangular", 1e-10);
  Check zero = is_exact_v<T> ? Check::exact(name + ".vanishing.exact", "triangular")
                             : Check(name + ".vanishing", "triangular", 1e-12);
  for (int i = 0; i <= kMaxIndex; ++i) {
    for (int j = 0; j <= kMaxIndex; ++j) {
      for (int k = 0; k < kDraws; ++k) {
        Check& target = i > j ? zero : check;
        detail::run_trial(target, [&] {
          det::TriangularParams<T> p;
          p.s = detail::draw<T>(ctx.rng, 2.0);
          p.b = detail::draw<T>(ctx.rng, 2.0);
          p.c = detail::draw<T>(ctx.rng, 2.0);
          p.d = detail::draw<T>(ctx.rng, 2.0);
          if (!triangular_admissible(kind, p, i, j)) return false;
          det::TriangularSides<T> sides;
          try {
            sides = det::triangular_sides(kind, p, i, j);
          } catch (const PoleError&) {
            return false;
          }
          auto where = [&] {
            return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " s=" + to_string(p.s) +
                   " b=" + to_string(p.b) + " c=" + to_string(p.c) + " d=" + to_string(p.d);
          };
          if constexpr (is_exact_v<T>) {
            compare(target, sides.row_combination, sides.closed_form, where);
          } else if (i > j) {
            // Absolute residual relative to the sum of |terms|.
            const double r = sides.scale > 0.0 ? std::abs(sides.row_combination) / sides.scale
                                               : std::abs(sides.row_combination);
            const bool closed_zero = sides.closed_form == Complex(0.0, 0.0);
            target.residual(closed_zero ? r : std::numeric_limits<double>::infinity(), where);
          } else {
            compare(target, sides.row_combination, sides.closed_form, where);
          }
          return true;
        });
      }
    }
  }
  ctx.out.push_back(check.result());
  ctx.out.push_back(zero.result());
}

}  // namespace

SuiteReport run_detform_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "detform";
  report.seed = options.seed;
  report.trials = options.trials > 0 ? options.trials : default_trials("detform");
  Rng rng(options.seed);
  Context ctx{rng, report.trials, report.checks};
  detail::timed(report, [&] { oracle_checks(ctx); });
  detail::timed(report, [&] { exact_oracle_checks(ctx); });
  detail::timed(report, [&] { structural_checks(ctx); });
  detail::timed(report, [&] { vandermonde_checks(ctx); });
  detail::timed(report, [&] { s_independence_checks(ctx); });
  detail::timed(report, [&] { alternant_checks(ctx); });
  detail::timed(report, [&] { complex_index_checks(ctx); });
  detail::timed(report, [&] {
    rearrangement_checks<Complex>(ctx);
    rearrangement_checks<Rational>(ctx);
  });
  for (auto kind : {det::TriangularKind::Lemma1Affine, det::TriangularKind::Lemma2Affine,
                    det::TriangularKind::Lemma3Affine}) {
    detail::timed(report, [&] {
      triangular_checks<Complex>(ctx, kind);
      triangular_checks<Rational>(ctx, kind);
    });
  }
  return report;
}

}  // namespace shiftfact::verify

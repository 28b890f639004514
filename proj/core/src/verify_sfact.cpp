#include <array>
#include <functional>
#include <numbers>

#include "shiftfact/connecting.hpp"
#include "shiftfact/format.hpp"
#include "shiftfact/sfact.hpp"
#include "verify_internal.hpp"

namespace shiftfact::verify {

namespace {

using detail::Check;
using detail::compare;
using detail::gamma_safe;

constexpr double kRadius = 5.0;
constexpr double kIdentityTol = 1e-10;
constexpr double kFactorGuard = 0.05;

struct Context {
  Rng& rng;
  int trials;
  std::vector<CheckResult>& out;
};

template <Field T>
bool nonzero(const T& x) {
  if constexpr (is_exact_v<T>) {
    return !x.is_zero();
  } else {
    return std::abs(x) >= kFactorGuard;
  }
}

/// Every factor of (z)_{s;q} is finite: for q < 0 the denominators
/// z - s, ..., z - |q| s stay away from zero.
template <Field T>
bool integer_index_ok(const T& z, const T& s, int q) {
  for (int k = 1; k <= -q; ++k) {
    if (!nonzero(T(z - from_int<T>(k) * s))) return false;
  }
  return true;
}

/// z, z + s, ..., z + (n-1)s all away from zero.
template <Field T>
bool progression_ok(const T& z, const T& s, int n) {
  for (int k = 0; k < n; ++k) {
    if (!nonzero(T(z + from_int<T>(k) * s))) return false;
  }
  return true;
}

template <Field T>
T exact_int(const BigInt& v) {
  if constexpr (is_exact_v<T>) {
    return Rational(v);
  } else {
    return Complex(v.get_d(), 0.0);
  }
}

template <Field T>
T choose(int n, int k) {
  return exact_int<T>(exact_binomial(n, k).numerator());
}

template <Field T>
T factorial(int n) {
  return exact_int<T>(exact_factorial(n));
}

std::string show(std::initializer_list<std::pair<const char*, std::string>> fields) {
  std::string out;
  for (const auto& [key, value] : fields) {
    if (!out.empty()) out += ' ';
    out += key;
    out += '=';
    out += value;
  }
  return out;
}

template <Field T>
std::string str(const T& v) {
  return to_string(v);
}
inline std::string str(int v) { return std::to_string(v); }

/// Runs `body(check)` for ctx.trials samples in field T. The body returns
/// false to request a redraw.
template <Field T, class Body>
void identity(Context& ctx, const std::string& name, double tol, Body body) {
  Check check = is_exact_v<T> ? Check::exact(name + ".exact", "identities") : Check(name, "identities", tol);
  for (int k = 0; k < ctx.trials; ++k) {
    detail::run_trial(check, [&] { return body(check); });
  }
  ctx.out.push_back(check.result());
}

/// Same identity in both fields.
template <class Body>
void identity_both(Context& ctx, const std::string& name, Body body) {
  identity<Complex>(ctx, name, kIdentityTol, [&](Check& c) { return body.template operator()<Complex>(c); });
  identity<Rational>(ctx, name, 0.0, [&](Check& c) { return body.template operator()<Rational>(c); });
}

/// Residual of lhs against each right side; the worst one is recorded.
template <Field T, class Describe>
void compare_all(Check& check, const T& lhs, std::initializer_list<T> rhs, Describe&& describe) {
  if constexpr (is_exact_v<T>) {
    bool same = true;
    for (const T& r : rhs) same = same && (lhs == r);
    check.equal(same, [&] { return describe() + ": sides differ"; });
  } else {
    double worst = 0.0;
    for (const T& r : rhs) worst = std::max(worst, relative_residual(lhs, r));
    check.residual(worst, describe);
  }
}

/// For an alternating sum the rounding left behind scales with sum |terms|,
/// not with the (possibly vanishing) value, so that is the reference.
template <Field T, class Describe>
void compare_sum(Check& check, const T& sum, double term_scale, const T& rhs, Describe&& describe) {
  if constexpr (is_exact_v<T>) {
    compare(check, sum, rhs, describe);
  } else {
    const double ref = std::max({std::abs(sum), std::abs(rhs), term_scale});
    const double r = ref > 0.0 ? std::abs(sum - rhs) / ref : 0.0;
    check.residual(r, [&] { return describe() + ": " + to_string(sum) + " vs " + to_string(rhs); });
  }
}

// ---------------------------------------------------------------------------
// numkernel

void numkernel_checks(Context& ctx) {
  Rng& rng = ctx.rng;
  {
    Check check("gamma.recurrence", "numkernel", 1e-12);
    for (int k = 0; k < ctx.trials; ++k) {
      detail::run_trial(check, [&] {
        const Complex z = rng.in_disc(20.0);
        if (near_nonpositive_integer(z, 0.1) || near_nonpositive_integer(z + 1.0, 0.1)) return false;
        const Complex lhs = complex_gamma(z + 1.0);
        compare(check, lhs, Complex(z * complex_gamma(z)), [&] { return "z=" + str(z); });
        return true;
      });
    }
    ctx.out.push_back(check.result());
  }
  {
    Check check("gamma.reflection", "numkernel", 1e-11);
    for (int k = 0; k < ctx.trials; ++k) {
      detail::run_trial(check, [&] {
        const Complex z = rng.in_disc(10.0);
        if (std::abs(z - std::round(z.real())) < detail::kSamplingPoleGuard) return false;
        compare(check, Complex(complex_gamma(z) * complex_gamma(1.0 - z)), Complex(kPi / sin_pi(z)),
                [&] { return "z=" + str(z); });
        return true;
      });
    }
    ctx.out.push_back(check.result());
  }
  {
    Check check("gamma.gauss_multiplication", "numkernel", 1e-10);
    for (int k = 0; k < ctx.trials; ++k) {
      detail::run_trial(check, [&] {
        const int m = rng.integer(2, 3);
        const Complex z = rng.in_disc(kRadius);
        if (!gamma_safe(static_cast<double>(m) * z)) return false;
        Complex prod = std::pow(2.0 * kPi, 0.5 * (1.0 - m)) *
                       principal_power(static_cast<double>(m), static_cast<double>(m) * z - 0.5);
        for (int l = 0; l < m; ++l) {
          const Complex arg = z + static_cast<double>(l) / m;
          if (!gamma_safe(arg)) return false;
          prod *= complex_gamma(arg);
        }
        compare(check, complex_gamma(static_cast<double>(m) * z), prod,
                [&] { return show({{"k", str(m)}, {"z", str(z)}}); });
        return true;
      });
    }
    ctx.out.push_back(check.result());
  }
  {
    // exp(log Gamma) on the real axis against the C library gamma.
    Check check("gamma.log_gamma_real", "numkernel", 1e-13);
    for (int k = 0; k < ctx.trials; ++k) {
      const double x = rng.uniform(0.05, 50.0);
      compare(check, std::exp(complex_log_gamma(x)), Complex(std::tgamma(x), 0.0),
              [&] { return "x=" + format_real(x); });
    }
    ctx.out.push_back(check.result());
  }
  {
    Check check("principal_power.integer", "numkernel", 1e-13);
    for (int k = 0; k < ctx.trials; ++k) {
      detail::run_trial(check, [&] {
        const Complex w = rng.in_disc(kRadius);
        if (std::abs(w) < kFactorGuard) return false;
        const int p = rng.integer(-8, 8);
        Complex repeated = 1.0;
        for (int j = 0; j < std::abs(p); ++j) repeated *= w;
        if (p < 0) repeated = 1.0 / repeated;
        compare(check, principal_power(w, static_cast<double>(p)), repeated,
                [&] { return show({{"w", str(w)}, {"p", str(p)}}); });
        return true;
      });
    }
    ctx.out.push_back(check.result());
  }
  {
    Check check = Check::exact("binomial.pascal_rows.exact", "numkernel");
    for (int n = 1; n <= 30; ++n) {
      for (int k = -1; k <= n + 1; ++k) {
        check.equal(exact_binomial(n, k) == exact_binomial(n - 1, k - 1) + exact_binomial(n - 1, k),
                    [&] { return show({{"n", str(n)}, {"k", str(k)}}); });
      }
    }
    ctx.out.push_back(check.result());
  }
}

// ---------------------------------------------------------------------------
// special values and the integer-index regime

template <Field T>
void special_values(Context& ctx) {
  Check check = is_exact_v<T> ? Check::exact("special_values.exact", "identities")
                              : Check("special_values", "identities", kIdentityTol);
  for (int k = 0; k <= 10; ++k) {
    for (int n = 0; n <= 10; ++n) {
      const T kk = from_int<T>(k);
      const T sign = from_int<T>(parity_sign(n));
      const T neg = rising(T(-kk), n);
      const T expected_neg = k < n ? from_int<T>(0) : sign * factorial<T>(k) / factorial<T>(k - n);
      auto where = [&] { return show({{"k", str(k)}, {"n", str(n)}}); };
      compare_all(check, neg, {T(sign * falling(kk, n)), expected_neg}, where);
      const T pos = rising(kk, n);
      const T expected_pos = k == 0 ? (n == 0 ? from_int<T>(1) : from_int<T>(0))
                                    : factorial<T>(k + n - 1) / factorial<T>(k - 1);
      compare_all(check, pos, {T(sign * falling(T(-kk), n)), expected_pos}, where);
    }
  }
  for (int t = 0; t < ctx.trials; ++t) {
    const T s = detail::draw<T>(ctx.rng, kRadius);
    const int n = ctx.rng.integer(0, 10);
    compare(check, sf_product(s, s, n), T(factorial<T>(n) * ipow(s, n)),
            [&] { return show({{"s", str(s)}, {"n", str(n)}}); });
  }
  ctx.out.push_back(check.result());
}

void integer_identities(Context& ctx) {
  Rng& rng = ctx.rng;

  identity_both(ctx, "sign_flip", [&]<Field T>(Check& check) {
    const T z = detail::draw<T>(rng, kRadius);
    const T s = detail::draw<T>(rng, kRadius);
    const int q = rng.integer(-6, 6);
    if (!integer_index_ok(z, s, q)) return false;
    compare(check, sf_integer(z, s, q), T(from_int<T>(parity_sign(q)) * sf_integer(T(-z), T(-s), q)),
            [&] { return show({{"z", str(z)}, {"s", str(s)}, {"q", str(q)}}); });
    return true;
  });

  identity_both(ctx, "reversal", [&]<Field T>(Check& check) {
    const T z = detail::draw<T>(rng, kRadius);
    const T s = detail::draw<T>(rng, kRadius);
    const int q = rng.integer(-6, 6);
    if (!integer_index_ok(z, s, q)) return false;
    compare(check, sf_integer(z, s, q), sf_integer(T(z + from_int<T>(q - 1) * s), T(-s), q),
            [&] { return show({{"z", str(z)}, {"s", str(s)}, {"q", str(q)}}); });
    return true;
  });

  identity_both(ctx, "multiplication_law.integer", [&]<Field T>(Check& check) {
    const T z = detail::draw<T>(rng, kRadius);
    const T s = detail::draw<T>(rng, kRadius);
    const int t = rng.integer(-6, 6);
    const int r = rng.integer(-6, 6);
    const T shifted = z + from_int<T>(t) * s;
    if (!integer_index_ok(z, s, t) || !integer_index_ok(shifted, s, r) || !integer_index_ok(z, s, t + r)) {
      return false;
    }
    compare(check, T(sf_integer(z, s, t) * sf_integer(shifted, s, r)), sf_integer(z, s, t + r),
            [&] { return show({{"z", str(z)}, {"s", str(s)}, {"t", str(t)}, {"r", str(r)}}); });
    return true;
  });

  identity_both(ctx, "inversion.integer", [&]<Field T>(Check& check) {
    const T z = detail::draw<T>(rng, kRadius);
    const T s = detail::draw<T>(rng, kRadius);
    const int q = rng.integer(-6, 6);
    const T shifted = z + from_int<T>(q) * s;
    if (!integer_index_ok(z, s, q) || !integer_index_ok(shifted, s, -q)) return false;
    compare(check, T(sf_integer(z, s, q) * sf_integer(shifted, s, -q)), from_int<T>(1),
            [&] { return show({{"z", str(z)}, {"s", str(s)}, {"q", str(q)}}); });
    return true;
  });

  identity_both(ctx, "negative_index", [&]<Field T>(Check& check) {
    const T z = detail::draw<T>(rng, kRadius);
    const T s = detail::draw<T>(rng, kRadius);
    const int q = rng.integer(1, 6);
    if (!integer_index_ok(z, s, -q)) return false;
    const T one = from_int<T>(1);
    compare_all(check, sf_negative(z, s, q),
                {T(one / sf_product(T(z - from_int<T>(q) * s), s, q)), T(one / sf_product(T(z - s), T(-s), q))},
                [&] { return show({{"z", str(z)}, {"s", str(s)}, {"q", str(q)}}); });
    return true;
  });

  identity_both(ctx, "binomial_multiplication", [&]<Field T>(Check& check) {
    const T z = detail::draw<T>(rng, kRadius);
    const int n = rng.integer(0, 6);
    const int p = rng.integer(0, 6);
    auto where = [&] { return show({{"z", str(z)}, {"n", str(n)}, {"p", str(p)}}); };
    compare(check, T(binomial(z, n) * binomial(T(z - from_int<T>(n)), p)),
            T(choose<T>(n + p, n) * binomial(z, n + p)), where);
    compare(check, T(binomial(z, n) * falling(from_int<T>(n), p)),
            T(falling(z, p) * binomial(T(z - from_int<T>(p)), n - p)), where);
    return true;
  });

  identity_both(ctx, "scaling", [&]<Field T>(Check& check) {
    const T z = detail::draw<T>(rng, kRadius);
    const T s = detail::draw<T>(rng, kRadius);
    const T w = detail::draw<T>(rng, kRadius);
    const int q = rng.integer(-6, 6);
    if (!nonzero(w) || !integer_index_ok(T(w * z), s, q)) return false;
    compare(check, sf_integer(T(w * z), s, q), T(ipow(w, q) * sf_integer(z, T(s / w), q)),
            [&] { return show({{"z", str(z)}, {"s", str(s)}, {"w", str(w)}, {"q", str(q)}}); });
    return true;
  });

  identity_both(ctx, "k_fold", [&]<Field T>(Check& check) {
    const T z = detail::draw<T>(rng, kRadius);
    const T s = detail::draw<T>(rng, kRadius);
    const int k = rng.integer(2, 3);
    const int n = rng.integer(0, 4);
    const T kk = from_int<T>(k);
    T prod = ipow(kk, k * n);
    for (int l = 0; l < k; ++l) prod *= sf_product(T(z + from_int<T>(l) * s / kk), s, n);
    compare(check, sf_product(T(kk * z), s, k * n), prod,
            [&] { return show({{"z", str(z)}, {"s", str(s)}, {"k", str(k)}, {"n", str(n)}}); });
    return true;
  });

  identity_both(ctx, "inverse_decomposition", [&]<Field T>(Check& check) {
    const T z = detail::draw<T>(rng, kRadius);
    const T s = detail::draw<T>(rng, kRadius);
    const int n = rng.integer(0, 6);
    const int p = rng.integer(0, n);
    if (!progression_ok(z, s, n)) return false;
    const T one = from_int<T>(1);
    const T full = sf_product(z, s, n);
    const T zp = z + from_int<T>(p) * s;
    compare_all(check, T(one / sf_product(z, s, p)),
                {sf_negative(zp, s, p), T(sf_product(zp, s, n - p) / full),
                 T(sf_product(T(z + from_int<T>(n - 1) * s), T(-s), n - p) / full)},
                [&] { return show({{"z", str(z)}, {"s", str(s)}, {"n", str(n)}, {"p", str(p)}}); });
    return true;
  });

  identity_both(ctx, "pascal.integer", [&]<Field T>(Check& check) {
    const T z = detail::draw<T>(rng, kRadius);
    const T s = detail::draw<T>(rng, kRadius);
    const int t = rng.integer(-6, 8);
    if (!integer_index_ok(z, s, t) || !integer_index_ok(T(z - s), s, t) || !integer_index_ok(z, s, t - 1)) {
      return false;
    }
    compare(check, T(sf_integer(z, s, t) - sf_integer(T(z - s), s, t)),
            T(from_int<T>(t) * s * sf_integer(z, s, t - 1)),
            [&] { return show({{"z", str(z)}, {"s", str(s)}, {"t", str(t)}}); });
    return true;
  });

  identity_both(ctx, "binomial_pascal", [&]<Field T>(Check& check) {
    const T z = detail::draw<T>(rng, kRadius);
    const int n = rng.integer(0, 10);
    compare(check, binomial(T(z + from_int<T>(1)), n), T(binomial(z, n) + binomial(z, n - 1)),
            [&] { return show({{"z", str(z)}, {"n", str(n)}}); });
    return true;
  });

  identity_both(ctx, "difference.integer", [&]<Field T>(Check& check) {
    const T z = detail::draw<T>(rng, kRadius);
    const T s = detail::draw<T>(rng, kRadius);
    const int t = rng.integer(-6, 8);
    const T zp = z + s;
    const T zm = z - s;
    if (!integer_index_ok(z, s, t) || !integer_index_ok(zp, s, t) || !integer_index_ok(zm, s, t) ||
        !integer_index_ok(zp, s, t - 1) || !integer_index_ok(z, s, t - 1)) {
      return false;
    }
    const T ts = from_int<T>(t) * s;
    auto where = [&] { return show({{"z", str(z)}, {"s", str(s)}, {"t", str(t)}}); };
    compare(check, T(sf_integer(zp, s, t) - sf_integer(z, s, t)), T(ts * sf_integer(zp, s, t - 1)), where);
    compare(check, T(sf_integer(zm, s, t) - sf_integer(z, s, t)), T(-ts * sf_integer(z, s, t - 1)), where);
    return true;
  });

  identity_both(ctx, "iterated_difference.integer", [&]<Field T>(Check& check) {
    const T z = detail::draw<T>(rng, kRadius);
    const T s = detail::draw<T>(rng, kRadius);
    const int t = rng.integer(-4, 8);
    const int p = rng.integer(0, 6);
    for (int k = 0; k <= p; ++k) {
      if (!integer_index_ok(T(z + from_int<T>(k) * s), s, t)) return false;
    }
    const T zp = z + from_int<T>(p) * s;
    if (!integer_index_ok(zp, s, t - p)) return false;
    T lhs = from_int<T>(0);
    double scale = 0.0;
    for (int k = 0; k <= p; ++k) {
      const T term =
          from_int<T>(parity_sign(p - k)) * choose<T>(p, k) * sf_integer(T(z + from_int<T>(k) * s), s, t);
      lhs += term;
      scale += std::abs(to_complex(term));
    }
    compare_sum(check, lhs, scale, T(falling(from_int<T>(t), p) * ipow(s, p) * sf_integer(zp, s, t - p)),
            [&] { return show({{"z", str(z)}, {"s", str(s)}, {"t", str(t)}, {"p", str(p)}}); });
    return true;
  });

  identity_both(ctx, "binomial_formula", [&]<Field T>(Check& check) {
    const T z = detail::draw<T>(rng, kRadius);
    const T w = detail::draw<T>(rng, kRadius);
    const T s = detail::draw<T>(rng, kRadius);
    const int n = rng.integer(0, 10);
    T sum = from_int<T>(0);
    for (int k = 0; k <= n; ++k) sum += choose<T>(n, k) * sf_product(z, s, k) * sf_product(w, s, n - k);
    compare(check, sf_product(T(z + w), s, n), sum,
            [&] { return show({{"z", str(z)}, {"w", str(w)}, {"s", str(s)}, {"n", str(n)}}); });
    return true;
  });

  identity_both(ctx, "binomial_vandermonde", [&]<Field T>(Check& check) {
    const T z = detail::draw<T>(rng, kRadius);
    const T w = detail::draw<T>(rng, kRadius);
    const int n = rng.integer(0, 10);
    T sum = from_int<T>(0);
    for (int k = 0; k <= n; ++k) sum += binomial(z, k) * binomial(w, n - k);
    compare(check, binomial(T(z + w), n), sum,
            [&] { return show({{"z", str(z)}, {"w", str(w)}, {"n", str(n)}}); });
    return true;
  });

  identity_both(ctx, "multinomial", [&]<Field T>(Check& check) {
    const std::array<T, 3> z{detail::draw<T>(rng, kRadius), detail::draw<T>(rng, kRadius),
                             detail::draw<T>(rng, kRadius)};
    const T s = detail::draw<T>(rng, kRadius);
    const int n = rng.integer(0, 6);
    T sum = from_int<T>(0);
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; a + b <= n; ++b) {
        const int c = n - a - b;
        const T coeff = factorial<T>(n) / (factorial<T>(a) * factorial<T>(b) * factorial<T>(c));
        sum += coeff * sf_product(z[0], s, a) * sf_product(z[1], s, b) * sf_product(z[2], s, c);
      }
    }
    compare(check, sf_product(T(z[0] + z[1] + z[2]), s, n), sum,
            [&] { return show({{"z0", str(z[0])}, {"z1", str(z[1])}, {"z2", str(z[2])}, {"n", str(n)}}); });
    return true;
  });

  identity_both(ctx, "difference_formula", [&]<Field T>(Check& check) {
    const T z = detail::draw<T>(rng, kRadius);
    const T w = detail::draw<T>(rng, kRadius);
    const T s = detail::draw<T>(rng, kRadius);
    const int n = rng.integer(0, 10);
    T sum = from_int<T>(0);
    for (int k = 0; k <= n; ++k) {
      sum += from_int<T>(parity_sign(n - k)) * choose<T>(n, k) * sf_product(z, s, k) * sf_product(w, T(-s), n - k);
    }
    compare(check, sf_product(T(z - w), s, n), sum,
            [&] { return show({{"z", str(z)}, {"w", str(w)}, {"s", str(s)}, {"n", str(n)}}); });
    return true;
  });

  identity_both(ctx, "inverse_binomial", [&]<Field T>(Check& check) {
    const T z = detail::draw<T>(rng, kRadius);
    const T w = detail::draw<T>(rng, kRadius);
    const T s = detail::draw<T>(rng, kRadius);
    const int n = rng.integer(0, 6);
    if (!progression_ok(z, s, n) || !progression_ok(w, s, n)) return false;
    const T one = from_int<T>(1);
    T sum = from_int<T>(0);
    for (int k = 0; k <= n; ++k) sum += choose<T>(n, k) / (sf_product(z, s, k) * sf_product(w, s, n - k));
    const T rhs = sf_product(T(z + w + from_int<T>(n - 1) * s), s, n) / (sf_product(z, s, n) * sf_product(w, s, n));
    compare(check, sum, rhs, [&] { return show({{"z", str(z)}, {"w", str(w)}, {"s", str(s)}, {"n", str(n)}}); });
    (void)one;
    return true;
  });

  identity_both(ctx, "ratio_sum", [&]<Field T>(Check& check) {
    const T z = detail::draw<T>(rng, kRadius);
    const T w = detail::draw<T>(rng, kRadius);
    const T s = detail::draw<T>(rng, kRadius);
    const int n = rng.integer(0, 6);
    if (!progression_ok(w, s, n)) return false;
    T sum = from_int<T>(0);
    for (int k = 0; k <= n; ++k) {
      sum += from_int<T>(parity_sign(n - k)) * choose<T>(n, k) * sf_product(z, s, k) / sf_product(w, s, k);
    }
    const T rhs = sf_product(T(z - w - from_int<T>(n - 1) * s), s, n) / sf_product(w, s, n);
    compare(check, sum, rhs, [&] { return show({{"z", str(z)}, {"w", str(w)}, {"s", str(s)}, {"n", str(n)}}); });
    return true;
  });

  identity_both(ctx, "weighted_sum", [&]<Field T>(Check& check) {
    const T z = detail::draw<T>(rng, kRadius);
    const T w = detail::draw<T>(rng, kRadius);
    const T s = detail::draw<T>(rng, kRadius);
    const int n = rng.integer(0, 6);
    const int p = rng.integer(0, n);
    T sum = from_int<T>(0);
    for (int k = 0; k <= n; ++k) {
      sum += choose<T>(n, k) * falling(from_int<T>(k), p) * sf_product(z, s, k) * sf_product(w, s, n - k);
    }
    const T rhs = falling(from_int<T>(n), p) * sf_product(z, s, p) *
                  sf_product(T(z + w + from_int<T>(p) * s), s, n - p);
    compare(check, sum, rhs,
            [&] { return show({{"z", str(z)}, {"w", str(w)}, {"s", str(s)}, {"n", str(n)}, {"p", str(p)}}); });
    return true;
  });

  {
    Check check = Check::exact("monomial_expansion.exact", "identities");
    for (int t = 0; t < ctx.trials; ++t) {
      const Rational s = rng.small_rational();
      const int n = rng.integer(0, 10);
      // Expand z (z + s) ... (z + (n-1)s) directly, lowest degree first.
      std::vector<Rational> poly{Rational(1)};
      for (int k = 0; k < n; ++k) {
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        const Rational shift = Rational(k) * s;
        for (std::size_t d = 0; d < poly.size(); ++d) {
          next[d + 1] += poly[d];
          next[d] += shift * poly[d];
        }
        poly = std::move(next);
      }
      const auto coeffs = monomial_expansion(s, n);
      bool same = coeffs == poly;
      if (n >= 1) {
        same = same && coeffs[static_cast<std::size_t>(n)] == Rational(1) && coeffs[0].is_zero() &&
               coeffs[1] == Rational(factorial<Rational>(n - 1)) * ipow(s, n - 1);
      }
      if (n >= 2) same = same && coeffs[static_cast<std::size_t>(n - 1)] == Rational(n * (n - 1), 2) * s;
      check.equal(same, [&] { return show({{"s", str(s)}, {"n", str(n)}}); });
    }
    ctx.out.push_back(check.result());
  }
}

// ---------------------------------------------------------------------------
// complex index (gamma path)

void complex_identities(Context& ctx) {
  Rng& rng = ctx.rng;

  identity<Complex>(ctx, "multiplication_law", kIdentityTol, [&](Check& check) {
    const Complex z = rng.in_disc(kRadius), s = rng.in_disc(kRadius);
    const Complex t = rng.in_disc(kRadius), r = rng.in_disc(kRadius);
    if (std::abs(s) < kFactorGuard) return false;
    const Complex x = z / s;
    if (!gamma_safe(x) || !gamma_safe(x + t) || !gamma_safe(x + t + r)) return false;
    compare(check, Complex(sf_general(z, s, t) * sf_general(z + t * s, s, r)), sf_general(z, s, t + r),
            [&] { return show({{"z", str(z)}, {"s", str(s)}, {"t", str(t)}, {"r", str(r)}}); });
    return true;
  });

  identity<Complex>(ctx, "inversion", kIdentityTol, [&](Check& check) {
    const Complex z = rng.in_disc(kRadius), s = rng.in_disc(kRadius), t = rng.in_disc(kRadius);
    if (std::abs(s) < kFactorGuard) return false;
    const Complex x = z / s;
    if (!gamma_safe(x) || !gamma_safe(x + t)) return false;
    compare(check, Complex(sf_general(z, s, t) * sf_general(z + t * s, s, -t)), Complex(1.0, 0.0),
            [&] { return show({{"z", str(z)}, {"s", str(s)}, {"t", str(t)}}); });
    return true;
  });

  identity<Complex>(ctx, "pascal", kIdentityTol, [&](Check& check) {
    const Complex z = rng.in_disc(kRadius), s = rng.in_disc(kRadius), t = rng.in_disc(kRadius);
    if (std::abs(s) < kFactorGuard) return false;
    const Complex x = z / s;
    if (!gamma_safe(x) || !gamma_safe(x - 1.0) || !gamma_safe(x + t) || !gamma_safe(x + t - 1.0)) return false;
    compare(check, Complex(sf_general(z, s, t) - sf_general(z - s, s, t)),
            Complex(t * s * sf_general(z, s, t - 1.0)),
            [&] { return show({{"z", str(z)}, {"s", str(s)}, {"t", str(t)}}); });
    return true;
  });

  identity<Complex>(ctx, "difference", kIdentityTol, [&](Check& check) {
    const Complex z = rng.in_disc(kRadius), s = rng.in_disc(kRadius), t = rng.in_disc(kRadius);
    if (std::abs(s) < kFactorGuard) return false;
    const Complex x = z / s;
    for (double shift : {-1.0, 0.0, 1.0}) {
      if (!gamma_safe(x + shift) || !gamma_safe(x + t + shift)) return false;
    }
    auto where = [&] { return show({{"z", str(z)}, {"s", str(s)}, {"t", str(t)}}); };
    compare(check, Complex(sf_general(z + s, s, t) - sf_general(z, s, t)),
            Complex(t * s * sf_general(z + s, s, t - 1.0)), where);
    compare(check, Complex(sf_general(z - s, s, t) - sf_general(z, s, t)),
            Complex(-t * s * sf_general(z, s, t - 1.0)), where);
    return true;
  });

  identity<Complex>(ctx, "iterated_difference", kIdentityTol, [&](Check& check) {
    const Complex z = rng.in_disc(kRadius), s = rng.in_disc(kRadius), t = rng.in_disc(kRadius);
    const int p = rng.integer(0, 6);
    if (std::abs(s) < kFactorGuard) return false;
    const Complex x = z / s;
    for (int k = 0; k <= p; ++k) {
      if (!gamma_safe(x + static_cast<double>(k)) || !gamma_safe(x + t + static_cast<double>(k))) return false;
    }
    Complex lhs = 0.0;
    double scale = 0.0;
    for (int k = 0; k <= p; ++k) {
      const Complex term = static_cast<double>(parity_sign(p - k)) * exact_binomial(p, k).to_double() *
                           sf_general(z + static_cast<double>(k) * s, s, t);
      lhs += term;
      scale += std::abs(term);
    }
    compare_sum(check, lhs, scale, delta_s_power(z, s, t, p),
            [&] { return show({{"z", str(z)}, {"s", str(s)}, {"t", str(t)}, {"p", str(p)}}); });
    return true;
  });

  identity<Complex>(ctx, "gamma_continuation", kIdentityTol, [&](Check& check) {
    const Complex z = rng.in_disc(kRadius), s = rng.in_disc(kRadius);
    const int n = rng.integer(0, 8);
    if (std::abs(s) < kFactorGuard) return false;
    const Complex x = z / s;
    if (!gamma_safe(x) || !gamma_safe(x + static_cast<double>(n))) return false;
    const Complex ratio = principal_power(s, static_cast<double>(n)) *
                          std::exp(complex_log_gamma(x + static_cast<double>(n)) - complex_log_gamma(x));
    compare(check, sf_product(z, s, n), ratio,
            [&] { return show({{"z", str(z)}, {"s", str(s)}, {"n", str(n)}}); });
    return true;
  });

  identity<Complex>(ctx, "sign_relation", kIdentityTol, [&](Check& check) {
    const Complex z = rng.in_disc(kRadius), s = rng.in_disc(kRadius), t = rng.in_disc(kRadius);
    if (std::abs(s) < kFactorGuard) return false;
    const Complex x = z / s;
    if (!gamma_safe(x) || !gamma_safe(x + t)) return false;
    const Complex rhs = principal_power(s, t) / principal_power(-s, t) * sf_general(-z, -s, t);
    compare(check, sf_general(z, s, t), rhs, [&] { return show({{"z", str(z)}, {"s", str(s)}, {"t", str(t)}}); });
    return true;
  });

  identity<Complex>(ctx, "reflection_reversal", kIdentityTol, [&](Check& check) {
    const Complex z = rng.in_disc(kRadius), s = rng.in_disc(kRadius), t = rng.in_disc(kRadius);
    if (std::abs(s) < kFactorGuard) return false;
    const Complex x = z / s;
    for (Complex arg : {x, x + t, 1.0 - x, 1.0 - x - t}) {
      if (!gamma_safe(arg)) return false;
    }
    const Complex rhs = principal_power(s, t) * sin_pi(x) / (principal_power(-s, t) * sin_pi(x + t)) *
                        sf_general(z + (t - 1.0) * s, -s, t);
    compare(check, sf_general(z, s, t), rhs, [&] { return show({{"z", str(z)}, {"s", str(s)}, {"t", str(t)}}); });
    return true;
  });

  {
    Check check("s_zero_continuity", "identities", 1e-4);
    for (int k = 0; k < ctx.trials; ++k) {
      detail::run_trial(check, [&] {
        const Complex z = rng.in_disc(kRadius);
        if (std::abs(z) < 0.5 || std::abs(std::arg(z)) > 0.75 * kPi) return false;
        const Complex t = rng.in_disc(2.0);
        compare(check, sf_general(z, Complex(1e-6, 0.0), t), principal_power(z, t),
                [&] { return show({{"z", str(z)}, {"t", str(t)}}); });
        return true;
      });
    }
    ctx.out.push_back(check.result());
  }
}

// ---------------------------------------------------------------------------
// generating function

void generating_checks(Context& ctx) {
  Rng& rng = ctx.rng;
  constexpr int kOrder = 40;
  constexpr int kSamples = 50;
  Check check("generating_function", "generating", 1e-9);
  for (int k = 0; k < kSamples; ++k) {
    detail::run_trial(check, [&] {
      const Complex z = rng.in_disc(kRadius);
      const Complex s = rng.in_disc(kRadius);
      if (std::abs(s) < kFactorGuard || std::abs(z / s) > 2.0) return false;
      const Complex x = rng.in_disc(0.5) / s;
      const auto series = generating_series(z, s, kOrder);
      compare(check, series.evaluate(x), series.closed_form(x),
              [&] { return show({{"z", str(z)}, {"s", str(s)}, {"x", str(x)}}); });
      return true;
    });
  }
  ctx.out.push_back(check.result());

  Check zero_shift("generating_function.s_zero", "generating", 1e-9);
  for (int k = 0; k < kSamples; ++k) {
    const Complex z = rng.in_disc(kRadius);
    const Complex x = rng.in_disc(1.0);
    const auto series = generating_series(z, 0.0, kOrder);
    compare(zero_shift, series.evaluate(x), std::exp(x * z), [&] { return show({{"z", str(z)}, {"x", str(x)}}); });
  }
  ctx.out.push_back(zero_shift.result());
}

// ---------------------------------------------------------------------------
// connecting coefficients

using Poly = std::vector<BigInt>;  // lowest degree first

Poly product_poly(int n, int step) {
  // prod_{k<n} (z + step k)
  Poly p{BigInt(1)};
  for (int k = 0; k < n; ++k) {
    Poly next(p.size() + 1, BigInt(0));
    for (std::size_t d = 0; d < p.size(); ++d) {
      next[d + 1] += p[d];
      next[d] += BigInt(step * k) * p[d];
    }
    p = std::move(next);
  }
  return p;
}

void accumulate(Poly& acc, const Poly& p, const BigInt& c) {
  if (acc.size() < p.size()) acc.resize(p.size(), BigInt(0));
  for (std::size_t d = 0; d < p.size(); ++d) acc[d] += c * p[d];
}

Poly trimmed(Poly p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

/// Set partitions of {0..n-1} counted by block number, via restricted
/// growth strings.
std::vector<BigInt> brute_force_partitions(int n) {
  std::vector<BigInt> counts(static_cast<std::size_t>(n) + 1, BigInt(0));
  if (n == 0) {
    counts[0] = 1;
    return counts;
  }
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> walk = [&](int pos, int blocks) {
    if (pos == n) {
      ++counts[static_cast<std::size_t>(blocks)];
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[static_cast<std::size_t>(pos)] = b;
      walk(pos + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  a[0] = 0;
  walk(1, 1);
  return counts;
}

void connecting_checks(Context& ctx) {
  constexpr int kMaxOrder = 12;
  const auto first = connecting_table(ConnectingKind::StirlingFirst, kMaxOrder);
  const auto second = connecting_table(ConnectingKind::StirlingSecond, kMaxOrder);
  const auto lah = connecting_table(ConnectingKind::Lah, kMaxOrder);

  Check c1 = Check::exact("stirling_first.expansion.exact", "connecting");
  Check c2 = Check::exact("stirling_second.expansion.exact", "connecting");
  Check c3 = Check::exact("lah.expansion.exact", "connecting");
  Check c4 = Check::exact("connecting.closed_values.exact", "connecting");
  for (int n = 0; n <= kMaxOrder; ++n) {
    auto where = [&] { return "n=" + std::to_string(n); };
    // [z]_n = sum_k s(n,k) z^k
    c1.equal(trimmed(product_poly(n, -1)) == trimmed(first.row(n)), where);

    // z^n = sum_k S(n,k) [z]_k
    Poly rhs;
    for (int k = 0; k <= n; ++k) accumulate(rhs, product_poly(k, -1), second.at(n, k));
    Poly monomial(static_cast<std::size_t>(n) + 1, BigInt(0));
    monomial[static_cast<std::size_t>(n)] = 1;
    c2.equal(trimmed(rhs) == trimmed(monomial), where);

    // (z)_n = sum_k L(n,k) [z]_k
    Poly lah_rhs;
    for (int k = 0; k <= n; ++k) accumulate(lah_rhs, product_poly(k, -1), lah.at(n, k));
    c3.equal(trimmed(lah_rhs) == trimmed(product_poly(n, 1)), where);

    bool closed = true;
    if (n >= 1) {
      closed = closed && second.at(n, n) == 1 && second.at(n, 1) == 1;
      for (int k = 1; k <= n; ++k) {
        const BigInt expected =
            exact_binomial(n - 1, k - 1).numerator() * exact_factorial(n) / exact_factorial(k);
        closed = closed && lah.at(n, k) == expected;
      }
    }
    if (n >= 2) {
      BigInt row_sum = 0;
      for (int k = 0; k <= n; ++k) row_sum += first.at(n, k);
      closed = closed && row_sum == 0;
    }
    c4.equal(closed, where);
  }
  ctx.out.push_back(c1.result());
  ctx.out.push_back(c2.result());
  ctx.out.push_back(c3.result());
  ctx.out.push_back(c4.result());

  Check brute = Check::exact("stirling_second.brute_force.exact", "connecting");
  for (int n = 0; n <= 8; ++n) {
    const auto counts = brute_force_partitions(n);
    bool same = true;
    for (int k = 0; k <= n; ++k) same = same && counts[static_cast<std::size_t>(k)] == second.at(n, k);
    brute.equal(same, [&] { return "n=" + std::to_string(n); });
  }
  ctx.out.push_back(brute.result());
}

}  // namespace

SuiteReport run_sfact_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "sfact";
  report.seed = options.seed;
  report.trials = options.trials > 0 ? options.trials : default_trials("sfact");
  Rng rng(options.seed);
  Context ctx{rng, report.trials, report.checks};
  detail::timed(report, [&] { numkernel_checks(ctx); });
  detail::timed(report, [&] { special_values<Complex>(ctx); });
  detail::timed(report, [&] { special_values<Rational>(ctx); });
  detail::timed(report, [&] { integer_identities(ctx); });
  detail::timed(report, [&] { complex_identities(ctx); });
  detail::timed(report, [&] { generating_checks(ctx); });
  detail::timed(report, [&] { connecting_checks(ctx); });
  return report;
}

}  // namespace shiftfact::verify

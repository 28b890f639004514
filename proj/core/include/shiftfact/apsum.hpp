#pragma once

#include <vector>

#include "shiftfact/sfact.hpp"

namespace shiftfact::apsum {

/// S_{s;p,n}(a, r) = sum_{k=0}^{n-1} (a + k r)_{s;p}.
template <Field T>
struct Args {
  T a;
  T r;
  T s;
  int p = 0;
  int n = 1;
};

namespace detail {
template <Field T>
void validate(const Args<T>& args) {
  if (args.n < 1) throw DomainError("apsum: n must be >= 1");
  if (args.p < 0) throw DomainError("apsum: p must be >= 0");
}
template <Field T>
T term_base(const Args<T>& args, int k) {
  return args.a + from_int<T>(k) * args.r;
}
}  // namespace detail

/// Term-by-term summation; r = 0 is allowed.
template <Field T>
T ap_sum_direct(const Args<T>& args) {
  detail::validate(args);
  T sum = from_int<T>(0);
  for (int k = 0; k < args.n; ++k) {
    sum += sf_product(detail::term_base(args, k), args.s, args.p);
  }
  return sum;
}

/// Recurrence on the order p, seeded by S_0 = n, reusing every lower order:
///   (p+1) r S_p = (z_n)_{s;p+1} - (z_0)_{s;p+1}
///                 - sum_{l<p} C(p+1, l) S_l (r)_{s;p+1-l}.
/// Singular at r = 0.
template <Field T>
T ap_sum_recurrence(const Args<T>& args) {
  detail::validate(args);
  if (vanishes(args.r, 0.0)) throw DomainError("ap_sum_recurrence: r = 0 is singular");

  const T z0 = args.a;
  const T zn = detail::term_base(args, args.n);
  std::vector<T> lower;
  lower.reserve(static_cast<std::size_t>(args.p) + 1);
  lower.push_back(from_int<T>(args.n));

  for (int p = 1; p <= args.p; ++p) {
    T acc = sf_product(zn, args.s, p + 1) - sf_product(z0, args.s, p + 1);
    T binom = from_int<T>(1);  // C(p+1, l), updated incrementally
    for (int l = 0; l < p; ++l) {
      acc -= binom * lower[static_cast<std::size_t>(l)] * sf_product(args.r, args.s, p + 1 - l);
      binom = binom * from_int<T>(p + 1 - l) / from_int<T>(l + 1);
    }
    lower.push_back(acc / (from_int<T>(p + 1) * args.r));
  }
  return lower.back();
}

/// Telescoped closed form for r = s or r = -s (s != 0):
///   r =  s: ((z_{n-1})_{s;p+1} - (a - s)_{s;p+1}) / ((p+1) s)
///   r = -s: ((z_0)_{s;p+1} - (z_n)_{s;p+1}) / ((p+1) s)
template <Field T>
T ap_sum_closed(const Args<T>& args) {
  detail::validate(args);
  if (vanishes(args.s, 0.0)) throw DomainError("ap_sum_closed: requires s != 0");
  const T denom = from_int<T>(args.p + 1) * args.s;
  if (args.r == args.s) {
    const T last = detail::term_base(args, args.n - 1);
    return (sf_product(last, args.s, args.p + 1) - sf_product(T(args.a - args.s), args.s, args.p + 1)) /
           denom;
  }
  if (args.r == T(-args.s)) {
    const T past_end = detail::term_base(args, args.n);
    return (sf_product(args.a, args.s, args.p + 1) - sf_product(past_end, args.s, args.p + 1)) / denom;
  }
  throw DomainError("ap_sum_closed: requires r = s or r = -s");
}

}  // namespace shiftfact::apsum

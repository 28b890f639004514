#pragma once

#include <gmpxx.h>

#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace shiftfact {

using BigInt = mpz_class;

/// Exact rational in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class so that generic code can use the
/// ordinary arithmetic operators without tripping over gmpxx expression
/// templates (every operator here returns a Rational, never an expression).
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I v) : q_(static_cast<long>(v)) {}  // NOLINT(implicit)

  Rational(long num, long den);
  explicit Rational(const BigInt& n) : q_(n) {}
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "p/q" or a finite decimal such as "-0.125" or "2.5e-3".
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }
  std::string str() const { return q_.get_str(); }
  const mpq_class& get() const { return q_; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class q_{0};
};

/// n! exactly; n >= 0.
BigInt exact_factorial(int n);

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
Rational exact_binomial(int n, int k);

}  // namespace shiftfact

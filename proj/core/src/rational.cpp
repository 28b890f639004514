#include "shiftfact/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "shiftfact/errors.hpp"

namespace shiftfact {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw PoleError({0.0, 0.0}, "rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw PoleError({0.0, 0.0}, "rational with zero denominator");
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PoleError({0.0, 0.0}, "exact division by zero");
  q_ /= o.q_;
  return *this;
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
    }
  }
  // Base 10 explicitly: mpz_class(str) would read "0125" as octal.
  return BigInt(std::string(digits), 10);
}

BigInt pow10(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return p;
}

// Signed decimal with optional fraction and exponent, e.g. -12.5e-3.
Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exponent = std::stol(std::string(s.substr(e + 1)));
    s = s.substr(0, e);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  std::string all(int_part);
  all += frac_part;
  BigInt mantissa = parse_integer(all, text);
  exponent -= static_cast<long>(frac_part.size());
  Rational r = exponent >= 0 ? Rational(BigInt(mantissa * pow10(exponent)))
                             : Rational(mantissa, pow10(-exponent));
  return negative ? -r : r;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (den.is_zero()) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(text);
}

BigInt exact_factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Rational exact_binomial(int n, int k) {
  if (n < 0) throw DomainError("exact_binomial requires n >= 0");
  if (k < 0 || k > n) return Rational(0);
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(c);
}

}  // namespace shiftfact

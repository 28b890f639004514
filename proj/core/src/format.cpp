#include "shiftfact/format.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "shiftfact/errors.hpp"
#include "shiftfact/scalar.hpp"

namespace shiftfact {

std::string format_real(double v, int digits) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string format_complex(Complex v, int digits) {
  const double re = v.real();
  const double im = v.imag();
  if (im == 0.0) return format_real(re, digits);
  std::string imag = format_real(std::abs(im), digits) + "i";
  if (re == 0.0) return (im < 0 ? "-" : "") + imag;
  return format_real(re, digits) + (im < 0 ? "-" : "+") + imag;
}

std::string to_string(const Complex& v) { return format_complex(v); }

std::string PoleError::describe(std::complex<double> z) { return format_complex(z); }

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

double parse_real_part(const std::string& s, std::string_view whole) {
  if (s.find('/') != std::string::npos) return Rational::parse(s).to_double();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse complex literal '" + std::string(whole) + "'");
  }
  if (used != s.size()) {
    throw std::invalid_argument("cannot parse complex literal '" + std::string(whole) + "'");
  }
  return v;
}

double parse_imag_coefficient(std::string s, std::string_view whole) {
  // s is the signed coefficient without the trailing 'i'
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real_part(s, whole);
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') return {parse_real_part(s, text), 0.0};

  s.pop_back();
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_imag_coefficient(s, text)};
  return {parse_real_part(s.substr(0, split), text),
          parse_imag_coefficient(s.substr(split), text)};
}

bool looks_rational(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) return false;
  std::size_t pos = 0;
  bool seen_digit = false;
  bool seen_slash = false;
  if (s[0] == '+' || s[0] == '-') pos = 1;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
      seen_digit = false;
    } else {
      return false;
    }
  }
  return seen_digit;
}

}  // namespace shiftfact

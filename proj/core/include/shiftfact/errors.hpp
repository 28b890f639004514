#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace shiftfact {

/// Raised when a gamma argument (or a factor that must stay nonzero) sits on
/// a pole: a nonpositive integer within kPoleTolerance, or an exact zero on
/// the rational path.
class PoleError : public std::domain_error {
 public:
  PoleError(std::complex<double> location, std::string context)
      : std::domain_error(context + " (at " + describe(location) + ")"),
        location_(location),
        context_(std::move(context)) {}

  std::complex<double> location() const noexcept { return location_; }
  const std::string& context() const noexcept { return context_; }

 private:
  static std::string describe(std::complex<double> z);

  std::complex<double> location_;
  std::string context_;
};

/// Argument outside the domain of an operation (w = 0 with Re t <= 0,
/// r = 0 in the order recurrence, r != +-s for the telescoped sum, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two evaluation routes of the same identity disagreed beyond tolerance.
class IdentityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested combination is outside what the library evaluates in closed
/// form (e.g. Jacobi a != b Mellin transform at general s).
class UnsupportedCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical quadrature did not reach the requested agreement.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shiftfact

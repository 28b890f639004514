#include "shiftfact/rmtpdd.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "shiftfact/format.hpp"
#include "shiftfact/gamma.hpp"
#include "shiftfact/quadrature.hpp"

namespace shiftfact::rmt {

namespace {

constexpr double kLn2 = std::numbers::ln2;

double even_odd_mask(int m, Parity parity) {
  // (1/2)(1 +- (-1)^m)
  const bool even = m % 2 == 0;
  return parity == Parity::Plus ? (even ? 1.0 : 0.0) : (even ? 0.0 : 1.0);
}

void require_positive_real_part(Complex s) {
  if (!(s.real() > 0.0)) throw DomainError("Phi(s) requires Re s > 0");
}

/// |x|^{s-1} eps(x), with eps = sign(x) for the odd part.
double mellin_factor(double x, double abs_x, double s, Parity parity) {
  const double power = std::pow(abs_x, s - 1.0);
  if (parity == Parity::Minus && x < 0.0) return -power;
  return power;
}

/// w(x) P_j(x) Q_k(x) on [-1, 1] with exact endpoint distances
/// one_minus = 1 - x and one_plus = 1 + x.
double compact_weight_basis(const EnsembleSpec& ens, double x, double one_minus, double one_plus, int j, int k) {
  if (ens.kind == Ensemble::Gegenbauer) {
    const double e = ens.lambda - 0.5;
    return std::pow(one_minus, e) * std::pow(one_plus, e) * std::pow(x, j + k);
  }
  // Jacobi basis (x - 1)^j (1 + x)^k.
  const double sign = (j % 2 == 0) ? 1.0 : -1.0;
  return sign * std::pow(one_minus, ens.a + j) * std::pow(one_plus, ens.b + k);
}

/// Monic recurrence coefficients P_{j+1} = (x - alpha_j) P_j - beta_j P_{j-1}.
double recurrence_alpha(const EnsembleSpec& ens, int j) {
  switch (ens.kind) {
    case Ensemble::Hermite:
    case Ensemble::Gegenbauer:
      return 0.0;
    case Ensemble::Laguerre:
      return 2.0 * j + ens.alpha + 1.0;
    case Ensemble::Jacobi: {
      const double a = ens.a, b = ens.b;
      if (j == 0) return (b - a) / (a + b + 2.0);
      const double t = 2.0 * j + a + b;
      return (b * b - a * a) / (t * (t + 2.0));
    }
  }
  return 0.0;
}

double recurrence_beta(const EnsembleSpec& ens, int j) {
  const double dj = j;
  switch (ens.kind) {
    case Ensemble::Hermite:
      return dj / 2.0;
    case Ensemble::Laguerre:
      return dj * (dj + ens.alpha);
    case Ensemble::Gegenbauer: {
      const double l = ens.lambda;
      if (j == 1) return 1.0 / (2.0 * (1.0 + l));
      return dj * (dj + 2.0 * l - 1.0) / (4.0 * (dj + l) * (dj + l - 1.0));
    }
    case Ensemble::Jacobi: {
      const double a = ens.a, b = ens.b;
      if (j == 1) return 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
      const double t = 2.0 * dj + a + b;
      return 4.0 * dj * (dj + a) * (dj + b) * (dj + a + b) / (t * t * (t + 1.0) * (t - 1.0));
    }
  }
  return 0.0;
}

double log_nu0(const EnsembleSpec& ens) {
  switch (ens.kind) {
    case Ensemble::Hermite:
      return 0.5 * std::log(kPi);
    case Ensemble::Laguerre:
      return std::lgamma(ens.alpha + 1.0);
    case Ensemble::Gegenbauer:
      return 0.5 * std::log(kPi) + std::lgamma(ens.lambda + 0.5) - std::lgamma(ens.lambda + 1.0);
    case Ensemble::Jacobi:
      return (ens.a + ens.b + 1.0) * kLn2 + std::lgamma(ens.a + 1.0) + std::lgamma(ens.b + 1.0) -
             std::lgamma(ens.a + ens.b + 2.0);
  }
  return 0.0;
}

std::vector<double> log_monic_norms(const EnsembleSpec& ens, int count) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  double acc = log_nu0(ens);
  for (int j = 0; j < count; ++j) {
    if (j > 0) acc += std::log(recurrence_beta(ens, j));
    out.push_back(acc);
  }
  return out;
}

/// Integral of f over the ensemble domain; f receives x, |x|, 1 - x, 1 + x.
using DomainIntegrand = std::function<double(double x, double abs_x, double one_minus, double one_plus)>;

quad::QuadResult combine(const quad::QuadResult& x, const quad::QuadResult& y) {
  return {x.value + y.value, x.error + y.error, x.l1 + y.l1, std::max(x.levels, y.levels)};
}

quad::QuadResult integrate_domain_detail(const EnsembleSpec& ens, const DomainIntegrand& f) {
  switch (ens.kind) {
    case Ensemble::Hermite: {
      const auto right = quad::integrate_half_line([&](double u) { return f(u, u, 1.0 - u, 1.0 + u); }, 0.0);
      const auto left = quad::integrate_half_line([&](double u) { return f(-u, u, 1.0 + u, 1.0 - u); }, 0.0);
      return combine(right, left);
    }
    case Ensemble::Laguerre:
      return quad::integrate_half_line([&](double u) { return f(u, u, 1.0 - u, 1.0 + u); }, 0.0);
    case Ensemble::Gegenbauer:
    case Ensemble::Jacobi: {
      const auto right = quad::integrate_interval(
          [&](double x, double dl, double dr) { return f(x, dl, dr, 1.0 + dl); }, 0.0, 1.0);
      const auto left = quad::integrate_interval(
          [&](double x, double dl, double dr) { return f(x, dr, 1.0 + dr, dl); }, -1.0, 0.0);
      return combine(right, left);
    }
  }
  return {};
}

double integrate_domain(const EnsembleSpec& ens, const DomainIntegrand& f) {
  return integrate_domain_detail(ens, f).value;
}

double weight_split(const EnsembleSpec& ens, double x, double abs_x, double one_minus, double one_plus) {
  switch (ens.kind) {
    case Ensemble::Hermite:
      return std::exp(-x * x);
    case Ensemble::Laguerre:
      return std::exp(ens.alpha * std::log(abs_x) - x);
    case Ensemble::Gegenbauer:
      return std::pow(one_minus, ens.lambda - 0.5) * std::pow(one_plus, ens.lambda - 0.5);
    case Ensemble::Jacobi:
      return std::pow(one_minus, ens.a) * std::pow(one_plus, ens.b);
  }
  return 0.0;
}

/// prod_{j<m} j! Gamma(c+j), or for the Gegenbauer weight
/// prod_{j<m} j! Gamma(lambda+1/2+j) Gamma(c+j) / Gamma(c+lambda+1/2+m-1+j).
Complex block_closed(const EnsembleSpec& ens, Complex c, int m) {
  std::vector<Complex> num;
  std::vector<Complex> den;
  double factorials = 0.0;
  for (int j = 0; j < m; ++j) {
    factorials += std::lgamma(j + 1.0);
    num.push_back(c + static_cast<double>(j));
    if (ens.kind == Ensemble::Gegenbauer) {
      num.emplace_back(ens.lambda + 0.5 + j, 0.0);
      den.push_back(c + ens.lambda + 0.5 + static_cast<double>(m - 1 + j));
    }
  }
  return std::exp(factorials) * det::gamma_quotient(num, den);
}

bool has_even_weight(const EnsembleSpec& ens) {
  return ens.kind == Ensemble::Hermite || ens.kind == Ensemble::Gegenbauer;
}

}  // namespace

std::string_view ensemble_name(Ensemble kind) {
  switch (kind) {
    case Ensemble::Hermite: return "hermite";
    case Ensemble::Laguerre: return "laguerre";
    case Ensemble::Gegenbauer: return "gegenbauer";
    case Ensemble::Jacobi: return "jacobi";
  }
  return "?";
}

std::optional<Ensemble> parse_ensemble(std::string_view name) {
  for (Ensemble e : {Ensemble::Hermite, Ensemble::Laguerre, Ensemble::Gegenbauer, Ensemble::Jacobi}) {
    if (ensemble_name(e) == name) return e;
  }
  return std::nullopt;
}

std::string_view parity_name(Parity p) { return p == Parity::Plus ? "+" : "-"; }

void EnsembleSpec::validate() const {
  if (beta != 2) throw DomainError("only beta = 2 ensembles are supported");
  if (n < 1) throw DomainError("ensemble dimension n must be >= 1");
  switch (kind) {
    case Ensemble::Hermite:
      break;
    case Ensemble::Laguerre:
      if (!(alpha > -1.0)) throw DomainError("Laguerre requires alpha > -1");
      break;
    case Ensemble::Gegenbauer:
      if (!(lambda > -0.5)) throw DomainError("Gegenbauer requires lambda > -1/2");
      break;
    case Ensemble::Jacobi:
      if (!(a > -1.0) || !(b > -1.0)) throw DomainError("Jacobi requires a > -1 and b > -1");
      break;
  }
}

std::string EnsembleSpec::describe() const {
  std::ostringstream os;
  os << ensemble_name(kind);
  switch (kind) {
    case Ensemble::Hermite: break;
    case Ensemble::Laguerre: os << "(alpha=" << format_real(alpha) << ")"; break;
    case Ensemble::Gegenbauer: os << "(lambda=" << format_real(lambda) << ")"; break;
    case Ensemble::Jacobi: os << "(a=" << format_real(a) << ",b=" << format_real(b) << ")"; break;
  }
  os << " n=" << n;
  return os.str();
}

EnsembleSpec hermite(int n) { return {Ensemble::Hermite, 0.0, 0.5, 0.0, 0.0, 2, n}; }
EnsembleSpec laguerre(double alpha, int n) { return {Ensemble::Laguerre, alpha, 0.5, 0.0, 0.0, 2, n}; }
EnsembleSpec gegenbauer(double lambda, int n) { return {Ensemble::Gegenbauer, 0.0, lambda, 0.0, 0.0, 2, n}; }
EnsembleSpec jacobi(double a, double b, int n) { return {Ensemble::Jacobi, 0.0, 0.5, a, b, 2, n}; }

double weight(const EnsembleSpec& ens, double x) {
  const double ax = std::abs(x);
  if (ens.kind == Ensemble::Laguerre && x < 0.0) return 0.0;
  if ((ens.kind == Ensemble::Gegenbauer || ens.kind == Ensemble::Jacobi) && ax > 1.0) return 0.0;
  return weight_split(ens, x, ax, 1.0 - x, 1.0 + x);
}

Complex phi_element(const EnsembleSpec& ens, int j, int k, Complex s, Parity parity) {
  ens.validate();
  require_positive_real_part(s);
  if (j < 0 || k < 0) throw DomainError("phi_element: indices must be nonnegative");
  const int m = j + k;
  const double md = m;
  switch (ens.kind) {
    case Ensemble::Hermite: {
      const double mask = even_odd_mask(m, parity);
      if (mask == 0.0) return 0.0;
      return complex_gamma((s + md) / 2.0);
    }
    case Ensemble::Laguerre:
      return complex_gamma(s + ens.alpha + md);
    case Ensemble::Gegenbauer: {
      const double mask = even_odd_mask(m, parity);
      if (mask == 0.0) return 0.0;
      const std::array<Complex, 2> num{Complex(ens.lambda + 0.5, 0.0), (s + md) / 2.0};
      const std::array<Complex, 1> den{ens.lambda + (s + md + 1.0) / 2.0};
      return det::gamma_quotient(num, den);
    }
    case Ensemble::Jacobi: {
      if (s != Complex(1.0, 0.0) || parity != Parity::Plus) {
        throw UnsupportedCase("Jacobi Phi in the (x-1)^j (1+x)^k basis is available only at s = 1, parity +");
      }
      const std::array<Complex, 2> num{Complex(ens.a + 1.0 + j, 0.0), Complex(ens.b + 1.0 + k, 0.0)};
      const std::array<Complex, 1> den{Complex(ens.a + ens.b + 2.0 + md, 0.0)};
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      return sign * std::exp((ens.a + ens.b + 1.0 + md) * kLn2) * det::gamma_quotient(num, den);
    }
  }
  return 0.0;
}

quad::QuadResult quadrature_phi_detail(const EnsembleSpec& ens, int j, int k, double s, Parity parity) {
  ens.validate();
  if (!(s > 0.0)) throw DomainError("quadrature_phi requires real s > 0");
  if (j < 0 || k < 0) throw DomainError("quadrature_phi: indices must be nonnegative");
  return integrate_domain_detail(ens, [&](double x, double ax, double om, double op) {
    const double mf = mellin_factor(x, ax, s, parity);
    if (ens.kind == Ensemble::Gegenbauer || ens.kind == Ensemble::Jacobi) {
      return mf * compact_weight_basis(ens, x, om, op, j, k);
    }
    const int m = j + k;
    double log_weight = -x * x;
    if (ens.kind == Ensemble::Laguerre) log_weight = ens.alpha * std::log(ax) - x;
    const double magnitude = std::exp((s - 1.0 + m) * std::log(ax) + log_weight);
    double sign = 1.0;
    if (x < 0.0 && m % 2 != 0) sign = -sign;
    if (x < 0.0 && parity == Parity::Minus) sign = -sign;
    return sign * magnitude;
  });
}

double quadrature_phi(const EnsembleSpec& ens, int j, int k, double s, Parity parity) {
  return quadrature_phi_detail(ens, j, k, s, parity).value;
}

det::Matrix<Complex> phi_matrix(const EnsembleSpec& ens, Complex s, Parity parity) {
  ens.validate();
  det::Matrix<Complex> m(static_cast<std::size_t>(ens.n));
  for (int j = 0; j < ens.n; ++j) {
    for (int k = 0; k < ens.n; ++k) {
      m(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = phi_element(ens, j, k, s, parity);
    }
  }
  return m;
}

std::vector<det::Matrix<Complex>> checkerboard_blocks(const EnsembleSpec& ens, Complex s, Parity parity) {
  ens.validate();
  if (!has_even_weight(ens)) throw UnsupportedCase("checkerboard factorization needs an even weight");
  const int n = ens.n;
  auto block = [&](int size, int row_offset, int col_offset) {
    det::Matrix<Complex> m(static_cast<std::size_t>(size));
    for (int j = 0; j < size; ++j) {
      for (int k = 0; k < size; ++k) {
        m(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) =
            phi_element(ens, 2 * j + row_offset, 2 * k + col_offset, s, parity);
      }
    }
    return m;
  };
  std::vector<det::Matrix<Complex>> out;
  if (parity == Parity::Plus) {
    out.push_back(block((n + 1) / 2, 0, 0));
    if (n / 2 > 0) out.push_back(block(n / 2, 1, 1));
  } else if (n % 2 == 0) {
    out.push_back(block(n / 2, 0, 1));
  }
  return out;
}

Complex checkerboard_combine(int n, Parity parity, const std::vector<Complex>& block_dets) {
  if (parity == Parity::Plus) {
    Complex acc = 1.0;
    for (const Complex& d : block_dets) acc *= d;
    return acc;
  }
  if (n % 2 != 0) return 0.0;
  if (block_dets.size() != 1) throw DomainError("odd-parity checkerboard expects one block");
  const double sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
  return sign * block_dets[0] * block_dets[0];
}

MellinResult mellin_closed(const EnsembleSpec& ens, Complex s, Parity parity) {
  ens.validate();
  require_positive_real_part(s);
  if (ens.is_symmetric_jacobi()) {
    auto result = mellin_closed(gegenbauer(ens.a + 0.5, ens.n), s, parity);
    return result;
  }

  MellinResult result;
  result.s = s;
  result.parity = parity;
  const int n = ens.n;

  switch (ens.kind) {
    case Ensemble::Hermite:
    case Ensemble::Gegenbauer:
      if (parity == Parity::Plus) {
        result.factorization.push_back(block_closed(ens, s / 2.0, (n + 1) / 2));
        if (n / 2 > 0) result.factorization.push_back(block_closed(ens, s / 2.0 + 1.0, n / 2));
      } else if (n % 2 == 0) {
        result.factorization.push_back(block_closed(ens, (s + 1.0) / 2.0, n / 2));
      }
      result.determinant = checkerboard_combine(n, parity, result.factorization);
      break;
    case Ensemble::Laguerre:
      result.determinant = block_closed(ens, s + ens.alpha, n);
      result.factorization.push_back(result.determinant);
      break;
    case Ensemble::Jacobi:
      if (s != Complex(1.0, 0.0) || parity != Parity::Plus) {
        throw UnsupportedCase("Jacobi Mellin transform with a != b is available only at s = 1, parity +");
      }
      result.determinant = std::exp(-log_normalization_const(ens) - std::lgamma(n + 1.0));
      result.factorization.push_back(result.determinant);
      break;
  }
  result.value = 0.5 * std::exp(log_normalization_const(ens) + std::lgamma(n + 1.0)) * result.determinant;
  return result;
}

double mellin_quadrature(const EnsembleSpec& ens, double s, Parity parity) {
  ens.validate();
  const auto size = static_cast<std::size_t>(ens.n);
  det::Matrix<Complex> m(size);
  for (std::size_t j = 0; j < size; ++j) {
    for (std::size_t k = 0; k < size; ++k) {
      m(j, k) = quadrature_phi(ens, static_cast<int>(j), static_cast<int>(k), s, parity);
    }
  }
  const Complex d = det::det_oracle(std::move(m));
  return 0.5 * std::exp(log_normalization_const(ens) + std::lgamma(ens.n + 1.0)) * d.real();
}

std::vector<double> monic_norms(const EnsembleSpec& ens, int count) {
  ens.validate();
  auto logs = log_monic_norms(ens, count);
  for (double& v : logs) v = std::exp(v);
  return logs;
}

double monic_norm_quadrature(const EnsembleSpec& ens, int j) {
  ens.validate();
  if (j < 0) throw DomainError("monic_norm_quadrature: j must be nonnegative");
  std::vector<double> alpha(static_cast<std::size_t>(j) + 1), beta(static_cast<std::size_t>(j) + 1, 0.0);
  for (int i = 0; i <= j; ++i) {
    alpha[static_cast<std::size_t>(i)] = recurrence_alpha(ens, i);
    if (i > 0) beta[static_cast<std::size_t>(i)] = recurrence_beta(ens, i);
  }
  return integrate_domain(ens, [&](double x, double ax, double om, double op) {
    double prev = 0.0, cur = 1.0;
    for (int i = 0; i < j; ++i) {
      const double next = (x - alpha[static_cast<std::size_t>(i)]) * cur - beta[static_cast<std::size_t>(i)] * prev;
      prev = cur;
      cur = next;
    }
    const double w = weight_split(ens, x, ax, om, op);
    return w == 0.0 ? 0.0 : w * cur * cur;
  });
}

double log_normalization_const(const EnsembleSpec& ens) {
  ens.validate();
  const int n = ens.n;
  double log_inverse = std::lgamma(n + 1.0);
  if (ens.kind == Ensemble::Jacobi) {
    const double a = ens.a, b = ens.b;
    log_inverse += (static_cast<double>(n) * (n - 1) + (a + b + 1.0) * n) * kLn2;
    for (int j = 0; j < n; ++j) {
      log_inverse += std::lgamma(j + 1.0) + std::lgamma(a + 1.0 + j) + std::lgamma(b + 1.0 + j) -
                     std::lgamma(a + b + n + 1.0 + j);
    }
  } else {
    for (double v : log_monic_norms(ens, n)) log_inverse += v;
  }
  return -log_inverse;
}

double normalization_const(const EnsembleSpec& ens) { return std::exp(log_normalization_const(ens)); }

double jacobi_inverse_normalization_via_det(const EnsembleSpec& ens, bool use_oracle) {
  ens.validate();
  if (ens.kind != Ensemble::Jacobi) throw DomainError("jacobi_inverse_normalization_via_det: Jacobi only");
  const int n = ens.n;
  const double n_factorial = std::exp(std::lgamma(n + 1.0));
  const double a = ens.a, b = ens.b;
  double log_prefactor = 0.0;
  for (int j = 0; j < n; ++j) {
    log_prefactor += (a + b + 1.0 + 2.0 * j) * kLn2 + std::lgamma(a + 1.0 + j) + std::lgamma(b + 1.0 + j);
  }
  const double sign = det::alternating_sign(static_cast<std::size_t>(n));  // prod_j (-1)^j
  det::DeterminantSpec<Complex> spec;
  spec.kind = det::Kind::InvGamma;
  std::vector<Complex> nodes;
  for (int k = 0; k < n; ++k) nodes.emplace_back(a + b + 2.0 + k, 0.0);
  const det::NodeSet<Complex> node_set(std::move(nodes));
  const Complex hankel = use_oracle ? det::det_oracle_extended(spec, node_set) : det::det_closed(spec, node_set);
  return n_factorial * sign * std::exp(log_prefactor) * hankel.real();
}

double integer_moment(const EnsembleSpec& ens, int q) {
  if (q < 0) throw DomainError("integer_moment: q must be nonnegative");
  const Complex s(q + 1.0, 0.0);
  const Parity parity = q % 2 == 0 ? Parity::Plus : Parity::Minus;
  return 2.0 * mellin_closed(ens, s, parity).value.real();
}

double eigenvalue_integral_2d(const EnsembleSpec& ens, const std::function<double(double)>& phi) {
  ens.validate();
  return integrate_domain(ens, [&](double x0, double ax0, double om0, double op0) {
    const double outer = weight_split(ens, x0, ax0, om0, op0) * phi(x0);
    if (outer == 0.0) return 0.0;
    const double inner = integrate_domain(ens, [&](double x1, double ax1, double om1, double op1) {
      const double w = weight_split(ens, x1, ax1, om1, op1);
      if (w == 0.0) return 0.0;
      const double d = x1 - x0;
      return d * d * w * phi(x1);
    });
    return outer * inner;
  });
}

}  // namespace shiftfact::rmt

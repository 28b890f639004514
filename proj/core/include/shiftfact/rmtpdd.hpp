#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shiftfact/detform.hpp"
#include "shiftfact/quadrature.hpp"

namespace shiftfact::rmt {

/// Classical weights w(x) on the domain D:
///   Hermite     exp(-x^2)              on R
///   Laguerre    x^alpha exp(-x)        on [0, inf),  alpha > -1
///   Gegenbauer  (1 - x^2)^(lambda-1/2) on [-1, 1],   lambda > -1/2
///   Jacobi      (1 - x)^a (1 + x)^b    on [-1, 1],   a, b > -1
enum class Ensemble { Hermite, Laguerre, Gegenbauer, Jacobi };

std::string_view ensemble_name(Ensemble kind);
std::optional<Ensemble> parse_ensemble(std::string_view name);

struct EnsembleSpec {
  Ensemble kind = Ensemble::Hermite;
  double alpha = 0.0;   // Laguerre
  double lambda = 0.5;  // Gegenbauer
  double a = 0.0;       // Jacobi
  double b = 0.0;       // Jacobi
  int beta = 2;
  int n = 1;

  /// Throws DomainError for out-of-range parameters, n < 1 or beta != 2.
  void validate() const;
  std::string describe() const;

  /// Jacobi with a == b is the Gegenbauer ensemble with lambda = a + 1/2.
  bool is_symmetric_jacobi() const { return kind == Ensemble::Jacobi && a == b; }
};

EnsembleSpec hermite(int n);
EnsembleSpec laguerre(double alpha, int n);
EnsembleSpec gegenbauer(double lambda, int n);
EnsembleSpec jacobi(double a, double b, int n);

/// Even (+) or odd (-) part of the determinant density.
enum class Parity { Plus, Minus };

inline int parity_factor(Parity p) { return p == Parity::Plus ? 1 : -1; }
std::string_view parity_name(Parity p);

/// Weight function value.
double weight(const EnsembleSpec& ens, double x);

/// Phi^{+-}_{j,k}(s) = int_D w(x) eps(x) |x|^{s-1} P_j(x) Q_k(x) dx in closed
/// form. Monomial basis except for Jacobi, whose basis is (x - 1)^j, (1 + x)^k
/// and which is only available at s = 1, parity +.
/// Requires Re s > 0.
Complex phi_element(const EnsembleSpec& ens, int j, int k, Complex s, Parity parity);

/// The same integral by double-exponential quadrature, real s > 0 only.
double quadrature_phi(const EnsembleSpec& ens, int j, int k, double s, Parity parity);

/// quadrature_phi with the error estimate and the integral of |integrand|,
/// the natural scale for entries whose exact value is zero.
quad::QuadResult quadrature_phi_detail(const EnsembleSpec& ens, int j, int k, double s, Parity parity);

/// Full n x n matrix of phi_element values.
det::Matrix<Complex> phi_matrix(const EnsembleSpec& ens, Complex s, Parity parity);

/// Sub-matrices of the checkerboard factorization for an even weight
/// (Hermite, Gegenbauer, symmetric Jacobi in the monomial basis):
///   parity +  -> {Phi_{2j,2k}}, {Phi_{2j+1,2k+1}}  (the second empty for n = 1)
///   parity -  -> {Phi_{2j,2k+1}} of size n/2 for even n, nothing for odd n
std::vector<det::Matrix<Complex>> checkerboard_blocks(const EnsembleSpec& ens, Complex s, Parity parity);

/// Reassembles det Phi from block determinants: the product for parity +,
/// (-1)^{n/2} times the square for parity - (zero when n is odd).
Complex checkerboard_combine(int n, Parity parity, const std::vector<Complex>& block_dets);

struct MellinResult {
  Complex s;
  Parity parity = Parity::Plus;
  Complex value;                      // M^{+-}_{n,2}(s)
  Complex determinant;                // det Phi^{+-}(s)
  std::vector<Complex> factorization; // block determinants (one entry for Laguerre/Jacobi)
};

/// M^{+-}_{n,2}(s) = (1/2) C_{n,2} n! det Phi^{+-}(s) with det Phi from the
/// gamma-product closed forms. Jacobi with a != b is limited to s = 1,
/// parity +; other requests raise UnsupportedCase.
MellinResult mellin_closed(const EnsembleSpec& ens, Complex s, Parity parity);

/// Same quantity with det Phi from det_oracle over quadrature_phi entries.
double mellin_quadrature(const EnsembleSpec& ens, double s, Parity parity);

/// Squared norms nu_j of the monic orthogonal polynomials, j < count, from
/// the three-term recurrence coefficients.
std::vector<double> monic_norms(const EnsembleSpec& ens, int count);

/// nu_j by quadrature of w(x) P_j(x)^2 with P_j generated by the monic
/// three-term recurrence.
double monic_norm_quadrature(const EnsembleSpec& ens, int j);

/// log C_{n,2} and C_{n,2} = 1 / (n! prod nu_j). Jacobi uses the closed form
/// 1 / C = n! 2^{n(n-1)+(a+b+1)n} prod_j j! Gamma(a+1+j) Gamma(b+1+j) / Gamma(a+b+n+1+j).
double log_normalization_const(const EnsembleSpec& ens);
double normalization_const(const EnsembleSpec& ens);

/// 1 / C_{n,2} for Jacobi through the inverse-gamma Hankel determinant,
///   n! prod_j (-1)^j 2^{a+b+1+2j} Gamma(a+1+j) Gamma(b+1+j) * det[1 / Gamma(a+b+2+j+k)],
/// with the determinant taken from the InvGamma closed form (`use_oracle`
/// false) or from det_oracle_extended on the same matrix (`use_oracle` true).
double jacobi_inverse_normalization_via_det(const EnsembleSpec& ens, bool use_oracle);

/// Non-negative integer moment M_{n,2}(q) of the determinant density.
double integer_moment(const EnsembleSpec& ens, int q);

/// int_D int_D (x1 - x0)^2 w(x0) w(x1) phi(x0) phi(x1) dx0 dx1 by nested
/// quadrature; equals 2 det[Phi_{jk}] for n = 2.
double eigenvalue_integral_2d(const EnsembleSpec& ens, const std::function<double(double)>& phi);

}  // namespace shiftfact::rmt

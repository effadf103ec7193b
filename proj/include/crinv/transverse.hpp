#pragma once

#include "crinv/polynomial.hpp"
#include "crinv/surface.hpp"

namespace crinv {

/// Pseudohermitian data of a CR manifold with transverse symmetry in the
/// coordinates (z, t): theta_0 = dt + f dz + fbar dzbar with
/// d theta_0 = i e^{2 phi} dz ^ dzbar, and theta = e^{-2 phi} theta_0,
/// theta^1 = dz. The Reeb field is an infinitesimal CR automorphism, so the
/// torsion vanishes and every quantity is a function of (z, zbar) only.
class PseudohermitianChart {
 public:
  explicit PseudohermitianChart(SurfaceChart base) : base_(std::move(base)) {}

  const SurfaceChart& base() const { return base_; }
  bool torsion_zero() const { return true; }

  /// Recomputes the theta ^ theta^1 coefficient of d theta from
  /// d(e^{-2 phi} theta_0) and subtracts the stored b. Zero when the Levi
  /// normalization d theta = i theta^1 ^ theta^1bar + b theta ^ theta^1 + bbar theta ^ theta^1bar holds.
  TruncatedSeries levi_normalization_residual() const;

 private:
  SurfaceChart base_;
};

/// A point (lambda, mu) in the fiber of Cartan's bundle over the chart center.
class FiberPoint {
 public:
  FiberPoint(GaussianRational lambda, GaussianRational mu = GaussianRational());
  const GaussianRational& lambda() const { return lambda_; }
  const GaussianRational& mu() const { return mu_; }

 private:
  GaussianRational lambda_;
  GaussianRational mu_;
};

/// Pseudohermitian scalar curvature R = -2 e^{-2 phi} D Dbar phi.
TruncatedSeries scalar_curvature_R(const PseudohermitianChart& chart);

struct ConnectionForms {
  /// omega_1^1 = omega_theta1 * theta^1 in the coframe theta^1 = dz.
  TruncatedSeries omega_theta1;
  /// omega-hat_1^1 = e^{phi_power phi} (unitary_theta1 theta-hat^1 + unitary_theta1bar theta-hat^1bar)
  /// in the unitary coframe theta-hat^1 = e^{phi} dz.
  TruncatedSeries unitary_theta1;
  TruncatedSeries unitary_theta1bar;
  int phi_power = -1;
};

/// Throws inconsistency_error if the unitary form fails to be skew-hermitian.
ConnectionForms connection_form_coefficients(const PseudohermitianChart& chart);

/// A fiber-dependent invariant represented as series * scale.
struct ScaledSeries {
  TruncatedSeries series;
  GaussianRational scale;

  GaussianRational value_at_center() const { return series.constant_term() * scale; }
  TruncatedSeries represented() const { return series * scale; }
};

/// L_1 = D - f d/dt acting on a function of (z, zbar): the t-component
/// annihilates it, so this is D.
TruncatedSeries apply_L1(const TruncatedSeries& f);

/// Q = r / (lambda lambdabar^3).
ScaledSeries q_representative(const PseudohermitianChart& chart, const FiberPoint& p);
/// Q_{;1} = (L_1 r - r b + i r mubar) / (lambda^2 lambdabar^3).
ScaledSeries q1_representative(const PseudohermitianChart& chart, const FiberPoint& p);
/// Q_{;11} = s / |lambda|^6, with s evaluated from the L_1 form and checked
/// against cartan_s.
ScaledSeries q11_representative(const PseudohermitianChart& chart, const FiberPoint& p);

/// The coefficients A, B, E of the Cartan-bundle forms as polynomials in
/// b, bbar, mu, mubar.
struct CartanCoefficients {
  BracketPolynomial A;
  BracketPolynomial B;
  BracketPolynomial E;
};

/// A = -(b + 2 i mubar), B = -i mu, E = -mu (bbar - i mu).
CartanCoefficients standard_cartan_coefficients();

struct BracketReport {
  BracketPolynomial lhs;  // (L1r - r b + i r mubar)(2A + 3 Bbar) - i r Ebar
  BracketPolynomial rhs;  // -2 (L1r) b + 2 r b^2 - i (L1r) mubar
  BracketPolynomial residual;
  bool is_zero() const { return residual.is_zero(); }
};

BracketReport bracket_residual(const CartanCoefficients& coefficients);
BracketReport verify_bracket_identity();

struct TransResiduals {
  TruncatedSeries q_residual;    // 6 r + e^{4 phi} R_{;1bar 1bar}
  TruncatedSeries q11_residual;  // 6 s + e^{6 phi} R_{;1bar 1bar 1 1}
  bool all_zero() const { return q_residual.is_zero() && q11_residual.is_zero(); }
};

/// Tanaka-Webster derivatives of t-independent functions coincide with the
/// surface covariant derivatives, so R's derivatives use the same engine.
TransResiduals check_qisgauss_trans(const PseudohermitianChart& chart);

}  // namespace crinv

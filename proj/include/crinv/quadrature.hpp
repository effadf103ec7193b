#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "crinv/invariants.hpp"

namespace crinv {

/// Truncated Taylor expansion in rho = |z|^2 about a fixed rho0:
/// h(rho0 + delta) = sum_j c_j delta^j, j <= degree.
/// Coefficients are held in long double: the covariant derivatives cancel
/// heavily and the extra bits keep that noise below double rounding.
class RadialJet {
 public:
  RadialJet() : RadialJet(0.0, 0) {}
  RadialJet(double rho0, int degree);
  static RadialJet constant(double rho0, int degree, double value);
  /// The jet of rho itself.
  static RadialJet variable(double rho0, int degree);

  double rho0() const { return rho0_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  double value() const { return static_cast<double>(c_[0]); }
  double operator[](int j) const { return static_cast<double>(c_[j]); }

  /// d/drho; degree drops by one.
  RadialJet derivative() const;

  RadialJet& operator+=(const RadialJet& o);
  RadialJet& operator-=(const RadialJet& o);
  RadialJet& operator+=(double c);
  RadialJet& operator*=(double s);
  friend RadialJet operator*(const RadialJet& a, const RadialJet& b);
  friend RadialJet exp(const RadialJet& t);
  friend RadialJet log(const RadialJet& t);
  friend RadialJet reciprocal(const RadialJet& t);

 private:
  double rho0_;
  std::vector<long double> c_;
};

inline RadialJet operator+(RadialJet a, const RadialJet& b) { return a += b; }
inline RadialJet operator-(RadialJet a, const RadialJet& b) { return a -= b; }
inline RadialJet operator*(RadialJet a, double s) { return a *= s; }
inline RadialJet operator*(double s, RadialJet a) { return a *= s; }

RadialJet exp(const RadialJet& t);
/// Natural log; the value must be positive.
RadialJet log(const RadialJet& t);
RadialJet reciprocal(const RadialJet& t);

/// A function z^n h(|z|^2) (n >= 0) or zbar^{-n} h(|z|^2) (n < 0) with real
/// h. Rotationally equivariant quantities built from a radial metric stay in
/// this form under D, Dbar and products.
struct RadialField {
  int charge = 0;
  RadialJet h;

  std::complex<double> at(std::complex<double> z) const;
};

RadialField operator+(const RadialField& a, const RadialField& b);
RadialField operator-(const RadialField& a, const RadialField& b);
RadialField operator*(const RadialField& a, const RadialField& b);
RadialField operator*(double s, RadialField a);
RadialField differentiate(const RadialField& f, Var v);

/// e^{2 phi} = (1 + |z|^2)^{-2} exp(2 psi(u)), u = |z|^2 / (1 + |z|^2), with
/// psi a rational polynomial in u. psi = 0 is the Fubini-Study metric; every
/// member is a smooth metric on the Riemann sphere.
class CompactMetric {
 public:
  explicit CompactMetric(std::vector<Rational> psi = {});

  const std::vector<Rational>& psi() const { return psi_; }
  std::string describe() const;

  double psi_at(double u) const;
  double e2phi(std::complex<double> z) const;
  /// Jet of phi at rho0.
  RadialJet phi_jet(double rho0, int degree) const;

  /// The same metric in the chart w = 1/z: psi(u) becomes psi(1 - u).
  CompactMetric reflected() const;

  /// Taylor expansion of the same metric at z = 0 as an exact chart. The
  /// constant psi(0) is dropped: it rescales the metric and leaves b, r and s
  /// unchanged.
  SurfaceChart symbolic_chart(int order) const;

 private:
  std::vector<Rational> psi_;
  std::vector<double> psi_d_;
};

/// Numeric covariant calculus on a CompactMetric at one point: fields carry
/// jets of sufficient degree for words of up to `max_letters` letters.
class NumericChart {
 public:
  NumericChart(const CompactMetric& metric, std::complex<double> z, int max_letters = 4);

  std::complex<double> point() const { return z_; }
  const RadialField& phi() const { return phi_; }
  RadialField gauss_curvature() const;
  /// u = rho / (1 + rho) as a field.
  RadialField u() const;
  /// f_{;w} with the e^{-phi} factors applied numerically; odd words allowed.
  RadialField covariant_derivative(const RadialField& f, const CovariantWord& word) const;

 private:
  std::complex<double> z_;
  RadialField phi_;
  RadialField dphi_;
  RadialField dbarphi_;
  RadialJet emphi_;
};

/// Numeric r = -(e^{4 phi} / 12) K_{;zbar zbar} at a point.
std::complex<double> numeric_cartan_r(const CompactMetric& metric, std::complex<double> z);

/// Composite Gauss-Legendre in u on [0, 1] times the trapezoid rule in the
/// angle. The area form is e^{2 phi} dx dy = (1/2) e^{2 psi(u)} du dtheta.
struct QuadratureScheme {
  int radial_panels = 4;
  int points_per_panel = 16;
  int angular_nodes = 128;
  /// Relative tolerance for identity checks.
  double identity_tolerance = 1e-6;
  /// Absolute threshold for the sphericity classification.
  double sphericity_tolerance = 1e-8;
  /// Floor for the denominator of a relative residual, as a fraction of the
  /// natural scale (integral of f^2 dA) / area^2 of the compared quantities.
  double zero_floor = 1e-6;

  int radial_nodes() const { return radial_panels * points_per_panel; }
  /// Doubles both the radial and the angular node counts.
  QuadratureScheme refined() const;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

struct Integral {
  double value = 0;
  double error_estimate = 0;
};

using SurfaceIntegrand = std::function<double(std::complex<double>)>;

/// Integral of the integrand against the metric's area form over the chart
/// (the sphere minus one point). The value comes from the refined scheme; the
/// estimate is its difference to the base scheme plus 64 eps times the
/// weighted sum of |sample|.
/// Throws evaluation_error on a non-finite sample.
Integral integrate_surface(const SurfaceIntegrand& integrand, const CompactMetric& metric,
                           const QuadratureScheme& scheme);

/// The same integral over the unit circle bundle for an S^1-invariant
/// integrand: 2 pi times the surface integral.
Integral integrate_circle_bundle(const SurfaceIntegrand& integrand, const CompactMetric& metric,
                                 const QuadratureScheme& scheme);

/// A rotation-invariant integrand as a function of rho = |z|^2.
using RadialIntegrand = std::function<double(double rho)>;

/// integrate_surface for a rotation-invariant integrand. The angular rule is
/// exact, so each radial node is evaluated once, and again at the next double
/// above rho; the weighted sum of the differences joins the estimate as the
/// evaluation noise, which dominates when the integral is near zero.
Integral integrate_radial(const RadialIntegrand& integrand, const CompactMetric& metric,
                          const QuadratureScheme& scheme);

/// A real function on the sphere: the metric's Gauss curvature or a
/// polynomial in u (coefficients ascending).
struct CompactFunction {
  enum class Kind { gauss_curvature, u_polynomial } kind = Kind::gauss_curvature;
  std::vector<double> u_coeffs;
  std::string name;

  static CompactFunction curvature() { return {Kind::gauss_curvature, {}, "K"}; }
  static CompactFunction u_polynomial(std::vector<double> coeffs, std::string name);
  RadialField field(const NumericChart& chart) const;
  /// The same function written in the chart w = 1/z, where u becomes 1 - u.
  CompactFunction reflected() const;
};

struct CalabiCheck {
  Integral lhs;  // integral of |f_{;zbar zbar}|^2 dA
  Integral rhs;  // integral of f_{;zbar zbar z z} f dA
  double natural_scale = 0;  // (integral of f^2 dA) / area^2
  double relative_residual = 0;
  bool passed = false;
};

CalabiCheck calabi_identity_check(const CompactFunction& f, const CompactMetric& metric, const QuadratureScheme& scheme);

struct RigidityReport {
  Integral i4;  // integral of K_{;zbar zbar z z} K dA
  Integral i2;  // integral of |K_{;zbar zbar}|^2 dA
  double relative_residual = 0;
  bool numeric_spherical = false;
  bool symbolic_spherical = false;
  int symbolic_order = 0;
  bool consistent = false;
};

RigidityReport rigidity_demo(const CompactMetric& metric, const QuadratureScheme& scheme, int symbolic_order = 16);

}  // namespace crinv

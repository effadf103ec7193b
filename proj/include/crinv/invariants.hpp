#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crinv/transverse.hpp"

namespace crinv {

struct SphericityVerdict {
  bool spherical = false;
  /// r vanishes through this total degree; -1 when r(0) != 0.
  int verified_through = -1;
  /// First nonzero coefficient of r in graded-lex order, if any.
  std::optional<Exponent> first_nonzero;
  GaussianRational first_nonzero_value;
};

/// Whether every coefficient of r of degree <= `order` vanishes. This is a
/// statement about the truncation, not the germ.
SphericityVerdict is_spherical(const SurfaceChart& chart, int order);

/// A rigid hypersurface Im w = F(z, zbar) in Chern-Moser normal form:
/// F = zz̄ + sum A^0_{kl} z^k zbar^l over k, l >= 2 with
/// A^0_{22} = A^0_{23} = A^0_{32} = A^0_{33} = 0.
class RigidSurface {
 public:
  explicit RigidSurface(TruncatedSeries F);

  const TruncatedSeries& F() const { return F_; }
  /// A^0_{kl}; zero outside the stored range.
  GaussianRational a0(int k, int l) const { return F_.coeff(k, l); }
  std::map<Exponent, GaussianRational> coeffs_A0() const;
  SurfaceChart chart() const { return phi_from_rigid_defining(F_); }

 private:
  TruncatedSeries F_;
};

/// Constant coefficient of s at lambda = 1, mu = 0 on the Levi-normalized
/// contact form. Needs F of order >= 10.
GaussianRational q11_at_origin(const RigidSurface& surface);

/// A one-parameter family eps -> F_eps used for calibration.
struct ProbeFamily {
  std::string description;
  std::function<TruncatedSeries(const Rational& eps, int order)> make;
};

/// F = zz̄ + eps z^4 zbar^4 (A^0_{44} = eps).
ProbeFamily a44_family();
/// F = zz̄ + eps (z^2 zbar^4 + z^4 zbar^2) (A^0_{24} = A^0_{42} = eps).
ProbeFamily a24_family();

struct CalibrationResult {
  GaussianRational c_value;
  std::string probe_family;
  std::vector<Rational> epsilon_probes;
  /// Coefficients of Q_{;11}(0) as a polynomial in eps, constant term first.
  std::vector<GaussianRational> interpolated_polynomial;
  std::vector<GaussianRational> probe_values;
};

/// Coefficients (constant first) of the unique polynomial of degree < n
/// through n points with distinct abscissae.
std::vector<GaussianRational> lagrange_coefficients(std::span<const Rational> xs, std::span<const GaussianRational> ys);

/// Runs q11_at_origin over the family at each probe and interpolates exactly.
/// Needs >= 3 distinct nonzero probes, and the interpolant's top coefficient
/// must vanish (otherwise the probe count does not pin the degree).
CalibrationResult calibrate_c(std::span<const Rational> probes, const ProbeFamily& family = a44_family(),
                              int order = 10);

struct ScalingCheck {
  Rational t;            // |lambda|^2
  GaussianRational lambda;
  GaussianRational value;     // constant coefficient of Q_{;11} at lambda
  GaussianRational residual;  // value * t^3 - value at lambda = 1
};

struct Weight3Report {
  GaussianRational base_value;
  std::vector<ScalingCheck> checks;
  bool all_zero() const;
};

/// Checks Q_{;11}(lambda) |lambda|^6 = Q_{;11}(1) for |lambda|^2 in {1, 4, 9/4}.
Weight3Report weight3_invariance_suite(const SurfaceChart& chart);
Weight3Report weight3_invariance_suite(const RigidSurface& surface);

}  // namespace crinv

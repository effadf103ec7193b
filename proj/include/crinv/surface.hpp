#pragma once

#include <initializer_list>
#include <vector>

#include "crinv/series.hpp"

namespace crinv {

enum class ChartProvenance { from_line_bundle_metric, from_rigid_defining, direct };

/// A coordinate chart on a Riemann surface with metric e^{2 phi} |dz|^2.
///
/// phi itself is generally not a rational series (e.g. e^{2 phi} = 2), so the
/// chart stores e^{2 phi} and the rational log-derivatives b = 2 D phi and
/// bbar = 2 Dbar phi. Every formula downstream is written in terms of these
/// and integer powers of e^{2 phi}.
class SurfaceChart {
 public:
  /// `e2phi` must be real with a positive rational constant term.
  SurfaceChart(TruncatedSeries e2phi, ChartProvenance provenance = ChartProvenance::direct);

  const TruncatedSeries& e2phi() const { return e2phi_; }
  const TruncatedSeries& em2phi() const { return em2phi_; }
  /// b = 2 D phi = D(e^{2 phi}) / e^{2 phi}; order N - 1.
  const TruncatedSeries& b() const { return b_; }
  const TruncatedSeries& bbar() const { return bbar_; }
  int order() const { return e2phi_.order(); }
  ChartProvenance provenance() const { return provenance_; }

  /// (e^{2 phi})^n for any integer n.
  TruncatedSeries e2phi_power(int n) const;

 private:
  TruncatedSeries e2phi_;
  TruncatedSeries em2phi_;
  TruncatedSeries b_;
  TruncatedSeries bbar_;
  ChartProvenance provenance_;
};

/// Chart of the metric calibrated by a positive line bundle with local
/// weight h: e^{2 phi} = -D Dbar log h. Throws not_strictly_pseudoconvex_error
/// unless the center value is a positive rational.
SurfaceChart phi_from_line_bundle_metric(const TruncatedSeries& h);

/// Chart of the rigid hypersurface Im w = F(z, zbar) with f = -i D F, so
/// that e^{2 phi} = 2 F_{z zbar}. F must be zz̄ plus terms of degree >= 4.
SurfaceChart phi_from_rigid_defining(const TruncatedSeries& F);

/// Gauss curvature K = -4 e^{-2 phi} D Dbar phi; order N - 2.
TruncatedSeries gauss_curvature(const SurfaceChart& chart);

/// Letters of a covariant derivative, applied left to right.
class CovariantWord {
 public:
  CovariantWord() = default;
  CovariantWord(std::initializer_list<Var> letters) : letters_(letters) {}
  explicit CovariantWord(std::vector<Var> letters) : letters_(std::move(letters)) {}

  const std::vector<Var>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

 private:
  std::vector<Var> letters_;
};

/// The value e^{phi_power * phi} * series. Covariant derivatives stay in this
/// form with a rational `series` for every word; only the final evaluation
/// of an odd phi_power needs e^{phi} itself.
struct PhiWeighted {
  int phi_power = 0;
  TruncatedSeries series;
};

/// f_{;w} for a scalar function f, following
///   f_{;..z}    = e^{-phi} (D f    + (l - k) (D phi) f)
///   f_{;..zbar} = e^{-phi} (Dbar f + (k - l) (Dbar phi) f)
/// where (k, l) counts the z and zbar letters already applied.
PhiWeighted covariant_derivative_weighted(const TruncatedSeries& f, const CovariantWord& word, const SurfaceChart& chart);

/// Turns e^{m phi} g into a plain series. Odd m requires e^{2 phi}(0) to be a
/// rational square; otherwise representation_error.
TruncatedSeries resolve(const PhiWeighted& value, const SurfaceChart& chart);

/// e^{2n phi} * value, exact.
PhiWeighted times_e2phi(PhiWeighted value, int n);

TruncatedSeries covariant_derivative(const TruncatedSeries& f, const CovariantWord& word, const SurfaceChart& chart);

/// Cartan's r, computed from bbar:
///   r = (1/6)(Dbar^2 D bbar - 3 bbar D Dbar bbar + 2 bbar^2 D bbar - D bbar Dbar bbar).
/// Order N - 4.
TruncatedSeries cartan_r(const SurfaceChart& chart);

/// s = D^2 r - 3 (D r) b + r (2 b^2 - D b); order N - 6.
TruncatedSeries cartan_s(const SurfaceChart& chart);

/// s = e^{4 phi} D(e^{-2 phi} D(e^{-2 phi} r)), the divergence form.
TruncatedSeries cartan_s_divergence(const SurfaceChart& chart);

struct GaussIdentityResiduals {
  TruncatedSeries q_residual;           // 12 r + e^{4 phi} K_{;zbar zbar}
  TruncatedSeries q11_residual;         // 12 s + e^{6 phi} K_{;zbar zbar z z}
  TruncatedSeries divergence_residual;  // s - e^{4 phi} D(e^{-2 phi} D(e^{-2 phi} r))
  bool all_zero() const {
    return q_residual.is_zero() && q11_residual.is_zero() && divergence_residual.is_zero();
  }
};

GaussIdentityResiduals check_qisgauss(const SurfaceChart& chart);

}  // namespace crinv

#include "crinv/surface.hpp"

#include <string>

#include "crinv/errors.hpp"

namespace crinv {

namespace {

bool is_positive_rational(const GaussianRational& c) { return c.is_real() && sgn(c.real()) > 0; }

GaussianRational half(int n) {
  Rational q(n, 2);
  q.canonicalize();
  return GaussianRational(q);
}

}  // namespace

SurfaceChart::SurfaceChart(TruncatedSeries e2phi, ChartProvenance provenance) : provenance_(provenance) {
  if (!e2phi.has_real_symmetry()) throw domain_error("conformal factor e^{2phi} must be a real series");
  if (!is_positive_rational(e2phi.constant_term()))
    throw not_strictly_pseudoconvex_error("e^{2phi} at the center is " + to_string(e2phi.constant_term()) +
                                          ", not a positive rational");
  e2phi_ = e2phi.as_real();
  em2phi_ = reciprocal(e2phi_);
  if (e2phi_.order() >= 1) {
    b_ = D(e2phi_) * em2phi_;
    bbar_ = conjugate(b_);
  }
}

TruncatedSeries SurfaceChart::e2phi_power(int n) const { return n >= 0 ? pow(e2phi_, n) : pow(em2phi_, -n); }

SurfaceChart phi_from_line_bundle_metric(const TruncatedSeries& h) {
  if (h.order() < 4) throw insufficient_order_error("line bundle metric needs order >= 4");
  if (!h.has_real_symmetry()) throw domain_error("line bundle metric h must be real");
  const GaussianRational h0 = h.constant_term();
  if (!is_positive_rational(h0)) throw domain_error("h(0) must be a positive rational, got " + to_string(h0));
  // log h = log h(0) + log1p(h/h(0) - 1); the constant drops out under D Dbar.
  const TruncatedSeries log_h = log1p(h * (GaussianRational(1) / h0) - GaussianRational(1));
  const TruncatedSeries e2phi = -D(Dbar(log_h));
  if (!is_positive_rational(e2phi.constant_term()))
    throw not_strictly_pseudoconvex_error("-D Dbar log h at the center is " + to_string(e2phi.constant_term()) +
                                          ", curvature is not positive");
  return SurfaceChart(e2phi.as_real(), ChartProvenance::from_line_bundle_metric);
}

SurfaceChart phi_from_rigid_defining(const TruncatedSeries& F) {
  if (F.order() < 4) throw insufficient_order_error("rigid defining function needs order >= 4");
  if (!F.has_real_symmetry()) throw malformed_defining_function_error("F must be real");
  for (int d = 0; d <= 3; ++d)
    for (int l = 0; l <= d; ++l) {
      const int k = d - l;
      const GaussianRational expected = (k == 1 && l == 1) ? GaussianRational(1) : GaussianRational(0);
      if (F.coeff(k, l) != expected)
        throw malformed_defining_function_error("F must be z*zb + O(|z|^4); coefficient of z^" + std::to_string(k) +
                                                " zb^" + std::to_string(l) + " is " + to_string(F.coeff(k, l)));
    }
  const TruncatedSeries e2phi = D(Dbar(F)) * GaussianRational(2);
  return SurfaceChart(e2phi.as_real(), ChartProvenance::from_rigid_defining);
}

TruncatedSeries gauss_curvature(const SurfaceChart& chart) {
  if (chart.order() < 2) throw insufficient_order_error("Gauss curvature needs order >= 2");
  // D Dbar phi = (1/2) D bbar.
  return (chart.em2phi() * D(chart.bbar()) * GaussianRational(-2)).as_real();
}

PhiWeighted covariant_derivative_weighted(const TruncatedSeries& f, const CovariantWord& word,
                                          const SurfaceChart& chart) {
  if (static_cast<int>(word.size()) > f.order())
    throw insufficient_order_error("word of length " + std::to_string(word.size()) + " exceeds series order " +
                                   std::to_string(f.order()));
  PhiWeighted out{0, f};
  int k = 0;
  int l = 0;
  for (const Var letter : word.letters()) {
    auto& g = out.series;
    const int m = out.phi_power;
    if (letter == Var::z) {
      // D(e^{m phi} g) = e^{m phi}(D g + (m/2) b g)
      TruncatedSeries next = D(g);
      if (const int w = m + l - k; w != 0) next += chart.b() * g * half(w);
      g = std::move(next);
      ++k;
    } else {
      TruncatedSeries next = Dbar(g);
      if (const int w = m + k - l; w != 0) next += chart.bbar() * g * half(w);
      g = std::move(next);
      ++l;
    }
    out.phi_power = m - 1;
  }
  return out;
}

PhiWeighted times_e2phi(PhiWeighted value, int n) {
  value.phi_power += 2 * n;
  return value;
}

TruncatedSeries resolve(const PhiWeighted& value, const SurfaceChart& chart) {
  const int m = value.phi_power;
  if (m % 2 == 0) return m == 0 ? value.series : value.series * chart.e2phi_power(m / 2);
  TruncatedSeries ephi;
  try {
    ephi = sqrt(chart.e2phi());
  } catch (const domain_error&) {
    throw representation_error("odd power e^{" + std::to_string(m) + " phi} is irrational on this chart (e^{2phi}(0) = " +
                               to_string(chart.e2phi().constant_term()) +
                               "); use a word with an even letter count or numeric evaluation");
  }
  // m odd: e^{m phi} = e^{(m-1) phi} e^{phi}
  return value.series * chart.e2phi_power((m - 1) / 2) * ephi;
}

TruncatedSeries covariant_derivative(const TruncatedSeries& f, const CovariantWord& word, const SurfaceChart& chart) {
  return resolve(covariant_derivative_weighted(f, word, chart), chart);
}

TruncatedSeries cartan_r(const SurfaceChart& chart) {
  if (chart.order() < 4) throw insufficient_order_error("r needs chart order >= 4");
  const TruncatedSeries& bb = chart.bbar();
  const TruncatedSeries d_bb = D(bb);
  const TruncatedSeries dbar_bb = Dbar(bb);
  const TruncatedSeries third = Dbar(Dbar(d_bb));
  TruncatedSeries sum = third - bb * D(dbar_bb) * GaussianRational(3) + bb * bb * d_bb * GaussianRational(2) -
                        d_bb * dbar_bb;
  return sum * GaussianRational(Rational(1, 6));
}

TruncatedSeries cartan_s(const SurfaceChart& chart) {
  if (chart.order() < 6) throw insufficient_order_error("s needs chart order >= 6");
  const TruncatedSeries r = cartan_r(chart);
  const TruncatedSeries& b = chart.b();
  const TruncatedSeries dr = D(r);
  return D(dr) - dr * b * GaussianRational(3) + r * (b * b * GaussianRational(2) - D(b));
}

TruncatedSeries cartan_s_divergence(const SurfaceChart& chart) {
  if (chart.order() < 6) throw insufficient_order_error("s needs chart order >= 6");
  const TruncatedSeries& em2 = chart.em2phi();
  const TruncatedSeries inner = D(em2 * cartan_r(chart));
  return chart.e2phi_power(2) * D(em2 * inner);
}

GaussIdentityResiduals check_qisgauss(const SurfaceChart& chart) {
  const TruncatedSeries K = gauss_curvature(chart);
  const auto k_bb = covariant_derivative_weighted(K, {Var::zbar, Var::zbar}, chart);
  const auto k_bbzz = covariant_derivative_weighted(K, {Var::zbar, Var::zbar, Var::z, Var::z}, chart);
  const TruncatedSeries r = cartan_r(chart);
  const TruncatedSeries s = cartan_s(chart);
  return {r * GaussianRational(12) + resolve(times_e2phi(k_bb, 2), chart),
          s * GaussianRational(12) + resolve(times_e2phi(k_bbzz, 3), chart), s - cartan_s_divergence(chart)};
}

}  // namespace crinv

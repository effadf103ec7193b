#include "crinv/invariants.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "crinv/errors.hpp"

namespace crinv {

SphericityVerdict is_spherical(const SurfaceChart& chart, int order) {
  const TruncatedSeries r = cartan_r(chart);
  if (order > r.order())
    throw insufficient_order_error("requested order " + std::to_string(order) + " exceeds the exact order " +
                                   std::to_string(r.order()) + " of r");
  SphericityVerdict v;
  if (auto e = r.lowest_term(); e && e->first + e->second <= order) {
    v.first_nonzero = e;
    v.first_nonzero_value = r.coeff(e->first, e->second);
    v.verified_through = e->first + e->second - 1;
    return v;
  }
  v.spherical = true;
  v.verified_through = order;
  if (auto e = r.lowest_term()) {
    v.first_nonzero = e;
    v.first_nonzero_value = r.coeff(e->first, e->second);
  }
  return v;
}

RigidSurface::RigidSurface(TruncatedSeries F) : F_(std::move(F)) {
  // Shape checks (real, zz̄ + O(4)) live in phi_from_rigid_defining.
  (void)phi_from_rigid_defining(F_);
  for (const auto& [e, c] : F_.terms()) {
    const auto [k, l] = e;
    if (k == 1 && l == 1) continue;
    if (k == 0 || l == 0)
      throw malformed_defining_function_error("harmonic term z^" + std::to_string(k) + " zb^" + std::to_string(l) +
                                              " is not in normal form");
    if (k < 2 || l < 2)
      throw malformed_defining_function_error("term z^" + std::to_string(k) + " zb^" + std::to_string(l) +
                                              " is not in normal form (needs k, l >= 2)");
    if ((k == 2 || k == 3) && (l == 2 || l == 3))
      throw malformed_defining_function_error("trace condition violated: A0_" + std::to_string(k) +
                                              std::to_string(l) + " = " + to_string(c) + " must vanish");
  }
  F_ = F_.as_real();
}

std::map<Exponent, GaussianRational> RigidSurface::coeffs_A0() const {
  auto t = F_.terms();
  t.erase(Exponent{1, 1});
  return t;
}

GaussianRational q11_at_origin(const RigidSurface& surface) {
  if (surface.F().order() < 10) throw insufficient_order_error("q11_at_origin needs F of order >= 10");
  const PseudohermitianChart chart(surface.chart());
  return q11_representative(chart, FiberPoint(1)).value_at_center();
}

ProbeFamily a44_family() {
  return {"z*zb + eps*z^4*zb^4", [](const Rational& eps, int order) {
            return TruncatedSeries::monomial(1, 1, 1, order) + TruncatedSeries::monomial(4, 4, GaussianRational(eps), order);
          }};
}

ProbeFamily a24_family() {
  return {"z*zb + eps*(z^2*zb^4 + z^4*zb^2)", [](const Rational& eps, int order) {
            return TruncatedSeries::monomial(1, 1, 1, order) + TruncatedSeries::monomial(2, 4, GaussianRational(eps), order) +
                   TruncatedSeries::monomial(4, 2, GaussianRational(eps), order);
          }};
}

std::vector<GaussianRational> lagrange_coefficients(std::span<const Rational> xs, std::span<const GaussianRational> ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw std::invalid_argument("abscissae and values differ in length");
  std::vector<GaussianRational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j), built by coefficients
    std::vector<Rational> basis{1};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (xs[i] == xs[j]) throw domain_error("duplicate interpolation abscissa " + to_string(xs[i]));
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t p = 0; p < basis.size(); ++p) {
        next[p + 1] += basis[p];
        next[p] -= basis[p] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    for (std::size_t p = 0; p < n; ++p) out[p] += ys[i] * GaussianRational(Rational(basis[p] / denom));
  }
  return out;
}

CalibrationResult calibrate_c(std::span<const Rational> probes, const ProbeFamily& family, int order) {
  if (probes.size() < 3)
    throw insufficient_probes_error("calibration needs at least 3 probes, got " + std::to_string(probes.size()));
  std::set<Rational> seen;
  for (const auto& e : probes) {
    if (sgn(e) == 0) throw domain_error("probe values must be nonzero");
    if (!seen.insert(e).second) throw domain_error("duplicate probe " + to_string(e));
  }
  CalibrationResult out;
  out.probe_family = family.description;
  out.epsilon_probes.assign(probes.begin(), probes.end());
  for (const auto& e : probes) out.probe_values.push_back(q11_at_origin(RigidSurface(family.make(e, order))));
  out.interpolated_polynomial = lagrange_coefficients(probes, out.probe_values);
  if (!out.interpolated_polynomial.back().is_zero())
    throw insufficient_probes_error("interpolant has full degree " + std::to_string(probes.size() - 1) +
                                    "; the probe count does not determine the eps-polynomial");
  if (!out.interpolated_polynomial.front().is_zero())
    throw inconsistency_error("Q_{;11}(0) has nonzero constant term " + to_string(out.interpolated_polynomial.front()) +
                              " in eps");
  out.c_value = out.interpolated_polynomial[1];
  return out;
}

bool Weight3Report::all_zero() const {
  return std::all_of(checks.begin(), checks.end(), [](const ScalingCheck& c) { return c.residual.is_zero(); });
}

Weight3Report weight3_invariance_suite(const SurfaceChart& chart) {
  const PseudohermitianChart ph(chart);
  Weight3Report out;
  out.base_value = q11_representative(ph, FiberPoint(1)).value_at_center();
  // lambda chosen real with |lambda|^2 = t
  for (const Rational& t : {Rational(1), Rational(4), Rational(9, 4)}) {
    const GaussianRational lambda(*rational_sqrt(t));
    const GaussianRational value = q11_representative(ph, FiberPoint(lambda)).value_at_center();
    const GaussianRational scaled = value * GaussianRational(Rational(t * t * t));
    out.checks.push_back({t, lambda, value, scaled - out.base_value});
  }
  return out;
}

Weight3Report weight3_invariance_suite(const RigidSurface& surface) { return weight3_invariance_suite(surface.chart()); }

}  // namespace crinv

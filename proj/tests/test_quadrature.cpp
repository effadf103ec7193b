#include <doctest.h>

#include <cmath>
#include <numbers>

#include "crinv/errors.hpp"
#include "crinv/quadrature.hpp"

using namespace crinv;

namespace {

const QuadratureScheme kScheme;
CompactMetric metric(std::initializer_list<std::pair<long, long>> psi) {
  std::vector<Rational> c;
  for (auto [p, d] : psi) {
    c.emplace_back(p, d);
    c.back().canonicalize();
  }
  return CompactMetric(c);
}

double one(std::complex<double>) { return 1.0; }

}  // namespace

TEST_CASE("Gauss-Legendre nodes") {
  std::vector<double> x, w;
  gauss_legendre(8, x, w);
  for (int p = 0; p <= 15; ++p) {
    double sum = 0;
    for (int i = 0; i < 8; ++i) sum += w[i] * std::pow(x[i], p);
    CHECK(sum == doctest::Approx(p % 2 ? 0.0 : 2.0 / (p + 1)).epsilon(1e-14));
  }
  CHECK_THROWS(gauss_legendre(0, x, w));
}

TEST_CASE("radial jets") {
  const RadialJet r = RadialJet::variable(0.5, 6);
  const RadialJet e = exp(r);
  CHECK(e[0] == doctest::Approx(std::exp(0.5)));
  CHECK(e[3] == doctest::Approx(std::exp(0.5) / 6));
  const RadialJet back = log(e);
  CHECK(back[0] == doctest::Approx(0.5));
  CHECK(back[1] == doctest::Approx(1.0));
  CHECK(std::abs(back[2]) < 1e-15);
  const RadialJet inv = reciprocal(RadialJet::constant(0.5, 6, 1.0) + r);  // 1/(1+rho) at rho = 1/2
  CHECK(inv[1] == doctest::Approx(-1.0 / (1.5 * 1.5)));
  CHECK(r.derivative().degree() == 5);
  CHECK_THROWS_AS(log(RadialJet::constant(0.5, 3, -1.0)), domain_error);
}

TEST_CASE("Fubini-Study area and circle bundle volume") {
  const CompactMetric fs;
  const Integral area = integrate_surface(one, fs, kScheme);
  CHECK(std::abs(area.value - std::numbers::pi) < 1e-10);
  CHECK(area.error_estimate < 1e-10);
  const Integral vol = integrate_circle_bundle(one, fs, kScheme);
  CHECK(vol.value == doctest::Approx(2 * std::numbers::pi * std::numbers::pi).epsilon(1e-12));
  // constant psi rescales the metric by e^{2 psi}
  const Integral scaled = integrate_surface(one, metric({{1, 2}}), kScheme);
  CHECK(scaled.value == doctest::Approx(std::numbers::pi * std::exp(1.0)).epsilon(1e-12));
}

TEST_CASE("reflection to the chart at infinity") {
  const CompactMetric m = metric({{0, 1}, {1, 10}, {0, 1}, {1, 5}});
  const CompactMetric r = m.reflected();
  for (double u : {0.1, 0.4, 0.9}) CHECK(r.psi_at(u) == doctest::Approx(m.psi_at(1 - u)));
  CHECK(r.reflected().psi() == m.psi());
  const std::complex<double> z(1.3, -0.4);
  const double rho = std::norm(z);
  CHECK(r.e2phi(1.0 / z) == doctest::Approx(m.e2phi(z) * rho * rho));
}

TEST_CASE("numeric curvature matches the exact chart") {
  const CompactMetric fs;
  const NumericChart at(fs, {0.3, 0.2});
  CHECK(at.gauss_curvature().at({0.3, 0.2}).real() == doctest::Approx(4.0));
  CHECK(std::abs(numeric_cartan_r(fs, {0.3, 0.2})) < 1e-12);

  const CompactMetric m = metric({{0, 1}, {1, 10}, {-1, 10}});
  const SurfaceChart exact = m.symbolic_chart(24);
  const std::complex<double> z(0.08, 0.05);
  const auto k_exact = evaluate(gauss_curvature(exact), z);
  CHECK(NumericChart(m, z).gauss_curvature().at(z).real() == doctest::Approx(k_exact.real()).epsilon(1e-10));
  const auto r_exact = evaluate(cartan_r(exact), z);
  const auto r_num = numeric_cartan_r(m, z);
  CHECK(std::abs(r_num - r_exact) < 1e-10 * std::max(1.0, std::abs(r_exact)));
}

TEST_CASE("covariant derivatives of radial fields") {
  const CompactMetric m = metric({{0, 1}, {0, 1}, {1, 50}});
  const std::complex<double> z(0.2, 0.1);
  const NumericChart chart(m, z);
  const RadialField K = chart.gauss_curvature();
  CHECK(K.charge == 0);
  // Dbar of a radial function carries a factor z
  CHECK(chart.covariant_derivative(K, {Var::zbar, Var::zbar}).charge == 2);
  CHECK(chart.covariant_derivative(K, {Var::z}).charge == -1);
  CHECK(chart.covariant_derivative(K, {Var::zbar, Var::zbar, Var::z, Var::z}).charge == 0);
}

TEST_CASE("Calabi identity") {
  for (const CompactMetric& m : {CompactMetric(), metric({{0, 1}, {1, 10}, {-1, 10}}), metric({{0, 1}, {0, 1}, {1, 100}})}) {
    for (const CompactFunction& f : {CompactFunction::curvature(), CompactFunction::u_polynomial({0, 1}, "u"),
                                     CompactFunction::u_polynomial({0.5, -1, 2}, "p")}) {
      const CalabiCheck c = calabi_identity_check(f, m, kScheme);
      CAPTURE(m.describe());
      CAPTURE(f.name);
      CHECK(c.passed);
      CHECK(c.relative_residual < 1e-6);
      CHECK(c.lhs.value >= -1e-12);
    }
  }
}

TEST_CASE("rigidity demo") {
  const RigidityReport fs = rigidity_demo(CompactMetric(), kScheme);
  CHECK(fs.numeric_spherical);
  CHECK(fs.symbolic_spherical);
  CHECK(fs.consistent);
  const RigidityReport bumped = rigidity_demo(metric({{0, 1}, {0, 1}, {1, 100}}), kScheme);
  CHECK_FALSE(bumped.numeric_spherical);
  CHECK_FALSE(bumped.symbolic_spherical);
  CHECK(bumped.i2.value > 0);
  CHECK(bumped.consistent);
}

TEST_CASE("non-finite densities are reported") {
  const CompactMetric huge = metric({{0, 1}, {1000, 1}});
  CHECK_THROWS_AS(integrate_surface(one, huge, kScheme), evaluation_error);
  QuadratureScheme tiny = kScheme;
  tiny.angular_nodes = 4;
  CHECK_THROWS(integrate_surface(one, CompactMetric(), tiny));
}

TEST_CASE("odd angular integrands vanish") {
  const CompactMetric m = metric({{0, 1}, {1, 10}, {-1, 10}});
  const Integral odd = integrate_surface([](std::complex<double> z) { return z.real() / (1 + std::norm(z)); }, m, kScheme);
  CHECK(std::abs(odd.value) < 1e-12);
}

TEST_CASE("radial integration matches the surface rule") {
  const CompactMetric m = metric({{0, 1}, {1, 10}, {-1, 10}});
  const auto u_of_z = [](std::complex<double> z) { return std::norm(z) / (1 + std::norm(z)); };
  const Integral surface = integrate_surface(u_of_z, m, kScheme);
  const Integral radial = integrate_radial([](double r) { return r * r / (1 + r * r); }, m, kScheme);
  CHECK(radial.value == doctest::Approx(surface.value).epsilon(1e-13));
  CHECK(radial.error_estimate < 1e-12);
  QuadratureScheme tiny = kScheme;
  tiny.radial_panels = 0;
  CHECK_THROWS(integrate_radial([](double) { return 1.0; }, m, tiny));
}

TEST_CASE("estimates cover refinement when the integral is zero") {
  // On the round sphere K is constant, so both Calabi integrals vanish and the
  // computed values are evaluation noise.
  QuadratureScheme s = kScheme;
  CalabiCheck prev = calabi_identity_check(CompactFunction::curvature(), CompactMetric(), s);
  for (int k = 0; k < 2; ++k) {
    s = s.refined();
    const CalabiCheck next = calabi_identity_check(CompactFunction::curvature(), CompactMetric(), s);
    CHECK(std::abs(next.lhs.value - prev.lhs.value) <= prev.lhs.error_estimate);
    CHECK(std::abs(next.rhs.value - prev.rhs.value) <= prev.rhs.error_estimate);
    CHECK(prev.rhs.error_estimate < 1e-13);
    prev = next;
  }
}

TEST_CASE("numeric r agrees with the symbolic chart near the origin") {
  for (const CompactMetric& m : {CompactMetric(), metric({{0, 1}, {1, 10}, {-1, 10}}), metric({{0, 1}, {0, 1}, {1, 100}})}) {
    const SurfaceChart exact = m.symbolic_chart(28);
    const TruncatedSeries r = cartan_r(exact);
    for (double x : {0.0, 0.1, -0.17})
      for (double y : {0.0, 0.12, -0.2}) {
        const std::complex<double> z(x, y);
        if (std::abs(z) > 0.25) continue;
        const auto want = evaluate(r, z);
        CAPTURE(m.describe());
        CAPTURE(z);
        CHECK(std::abs(numeric_cartan_r(m, z) - want) <= 1e-6 * std::max(std::abs(want), 1e-6));
      }
  }
}

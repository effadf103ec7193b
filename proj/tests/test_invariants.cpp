#include <doctest.h>

#include <vector>

#include "crinv/errors.hpp"
#include "crinv/expression.hpp"
#include "crinv/invariants.hpp"

using namespace crinv;

namespace {

SurfaceChart chart(const char* e2phi, int order) {
  return SurfaceChart(parse_expression(e2phi, order).as_real(), ChartProvenance::direct);
}

std::vector<Rational> rationals(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<Rational> out;
  for (auto [p, d] : xs) out.emplace_back(p, d);
  return out;
}

}  // namespace

TEST_CASE("sphericity") {
  const SphericityVerdict round = is_spherical(chart("(1+z*zb)^-2", 14), 10);
  CHECK(round.spherical);
  CHECK(round.verified_through == 10);
  CHECK(is_spherical(chart("1", 8), 4).spherical);
  const SphericityVerdict v = is_spherical(chart("1+z*zb", 10), 6);
  CHECK_FALSE(v.spherical);
  CHECK(v.verified_through == 1);
  CHECK(v.first_nonzero == Exponent{2, 0});
  CHECK(v.first_nonzero_value == GaussianRational(Rational(5, 2)));
  CHECK_THROWS_AS(is_spherical(chart("1+z*zb", 10), 7), insufficient_order_error);
}

TEST_CASE("sphericity reports how far it verified") {
  // r starts at degree 5 here
  const SphericityVerdict v = is_spherical(chart("1 + z^4*zb^4", 14), 10);
  CHECK_FALSE(v.spherical);
  CHECK(v.first_nonzero.has_value());
  CHECK(v.verified_through == v.first_nonzero->first + v.first_nonzero->second - 1);
}

TEST_CASE("rigid normal form validation") {
  CHECK_NOTHROW(RigidSurface(parse_expression("z*zb + 1/10*z^4*zb^4", 10)));
  CHECK_THROWS_AS(RigidSurface(parse_expression("z*zb + z^4", 10)), malformed_defining_function_error);
  CHECK_THROWS_AS(RigidSurface(parse_expression("z*zb + z^3*zb + z*zb^3", 10)), malformed_defining_function_error);
  CHECK_THROWS_AS(RigidSurface(parse_expression("z*zb + z^2*zb^2", 10)), malformed_defining_function_error);
  CHECK_THROWS_AS(RigidSurface(parse_expression("z*zb + z^3*zb^2 + z^2*zb^3", 10)), malformed_defining_function_error);
  const RigidSurface s(parse_expression("z*zb + 1/10*z^4*zb^4 + z^2*zb^4 + z^4*zb^2", 10));
  CHECK(s.a0(4, 4) == GaussianRational(Rational(1, 10)));
  CHECK(s.coeffs_A0().size() == 3);
}

TEST_CASE("Q_{;11} at the origin is linear in the z^4 zb^4 coefficient") {
  CHECK(q11_at_origin(RigidSurface(parse_expression("z*zb + 1/10*z^4*zb^4", 10))) == GaussianRational(Rational(48, 5)));
  CHECK(q11_at_origin(RigidSurface(parse_expression("z*zb + 1/16*z^4*zb^4", 12))) == GaussianRational(6));
  CHECK(q11_at_origin(RigidSurface(parse_expression("z*zb + 1/10*(z^2*zb^4 + z^4*zb^2)", 10))).is_zero());
  CHECK_THROWS_AS(q11_at_origin(RigidSurface(parse_expression("z*zb + z^4*zb^4", 9))), insufficient_order_error);
}

TEST_CASE("Lagrange interpolation") {
  const auto xs = rationals({{1, 1}, {2, 1}, {3, 1}});
  const std::vector<GaussianRational> ys{GaussianRational(1), GaussianRational(4), GaussianRational(9)};
  const auto coeffs = lagrange_coefficients(xs, ys);
  REQUIRE(coeffs.size() == 3);
  CHECK(coeffs[0].is_zero());
  CHECK(coeffs[1].is_zero());
  CHECK(coeffs[2] == GaussianRational(1));
  const auto dup = rationals({{1, 1}, {1, 1}});
  CHECK_THROWS_AS(lagrange_coefficients(dup, std::span(ys).first(2)), domain_error);
}

TEST_CASE("calibration") {
  const CalibrationResult c = calibrate_c(rationals({{1, 10}, {1, 16}, {1, 25}}));
  CHECK(c.c_value == GaussianRational(96));
  CHECK(c.probe_values.front() == GaussianRational(Rational(48, 5)));
  CHECK(c.interpolated_polynomial.size() == 3);
  CHECK(calibrate_c(rationals({{1, 10}, {1, 16}, {1, 25}, {1, 32}})).c_value == GaussianRational(96));
  CHECK(calibrate_c(rationals({{-1, 7}, {1, 3}, {2, 5}})).c_value == GaussianRational(96));
  CHECK(calibrate_c(rationals({{1, 10}, {1, 16}, {1, 25}}), a24_family()).c_value.is_zero());
  CHECK_THROWS_AS(calibrate_c(rationals({{1, 10}, {1, 16}})), insufficient_probes_error);
  CHECK_THROWS_AS(calibrate_c(rationals({{1, 10}, {1, 10}, {1, 25}})), domain_error);
  CHECK_THROWS_AS(calibrate_c(rationals({{0, 1}, {1, 16}, {1, 25}})), domain_error);
}

TEST_CASE("weight-3 scaling") {
  for (const char* e : {"1+z*zb", "1 + z*zb + 1/2*z^2*zb + 1/2*z*zb^2", "(1+z*zb)^-2"}) {
    const Weight3Report w = weight3_invariance_suite(chart(e, 10));
    CHECK(w.all_zero());
    CHECK(w.checks.size() == 3);
  }
  const Weight3Report w = weight3_invariance_suite(RigidSurface(parse_expression("z*zb + 1/10*z^4*zb^4", 10)));
  CHECK(w.base_value == GaussianRational(Rational(48, 5)));
  CHECK(w.all_zero());
}

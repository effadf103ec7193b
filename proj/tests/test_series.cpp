#include <doctest.h>

#include "crinv/errors.hpp"
#include "crinv/expression.hpp"
#include "support.hpp"

using namespace crinv;

namespace {

TruncatedSeries z(int n) { return TruncatedSeries::monomial(1, 0, 1, n); }
TruncatedSeries zb(int n) { return TruncatedSeries::monomial(0, 1, 1, n); }
GaussianRational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return GaussianRational(r);
}

}  // namespace

TEST_CASE("gaussian rationals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  const GaussianRational a(Rational(1, 2), Rational(-3));
  CHECK(to_string(a) == "1/2-3i");
  CHECK(to_string(GaussianRational(0, 2)) == "2i");
  CHECK(to_string(GaussianRational(5)) == "5");
  CHECK(a * a.conj() == GaussianRational(a.norm()));
  CHECK((a / a) == GaussianRational(1));
  CHECK_THROWS_AS(a / GaussianRational(), domain_error);
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(rational_sqrt(Rational(2)).has_value());
}

TEST_CASE("construction and storage") {
  const auto s = TruncatedSeries::from_terms(3, {{{1, 2}, q(4)}, {{0, 0}, q(1)}});
  CHECK(s.coeff(1, 2) == q(4));
  CHECK(s.coeff(5, 5).is_zero());
  CHECK(s.terms().size() == 2);
  CHECK(s.lowest_term() == Exponent{0, 0});
  CHECK_THROWS_AS(TruncatedSeries::from_terms(3, {{{2, 2}, q(1)}}), domain_error);
  CHECK(TruncatedSeries::index(0, 0) == 0);
  CHECK(TruncatedSeries::index(1, 0) == 1);
  CHECK(TruncatedSeries::index(0, 1) == 2);
  CHECK(TruncatedSeries::size_for(2) == 6);
  CHECK(TruncatedSeries(4).is_zero());
  CHECK_FALSE(TruncatedSeries(4).lowest_term().has_value());
}

TEST_CASE("order bookkeeping") {
  const TruncatedSeries a = z(6) + GaussianRational(1);
  const TruncatedSeries b = zb(4);
  CHECK((a * b).order() == 4);
  CHECK((a + b).order() == 4);
  CHECK(D(a).order() == 5);
  CHECK_THROWS_AS(series_arith(a, b, ArithOp::add), order_mismatch_error);
  CHECK(series_arith(a, a, ArithOp::mul) == a * a);
  CHECK(series_arith(a, a, ArithOp::sub).is_zero());
}

TEST_CASE("derivatives") {
  const TruncatedSeries s = pow(z(6), 2) * zb(6);  // z^2 zb
  CHECK(D(s) == (z(5) * zb(5)) * GaussianRational(2));
  CHECK(Dbar(s) == pow(z(5), 2));
  CHECK(D(TruncatedSeries::constant(q(3), 2)).is_zero());
}

TEST_CASE("reality is a checked claim") {
  const TruncatedSeries s = z(4) * zb(4) + GaussianRational(1);
  CHECK_FALSE(s.real_flag());
  CHECK(s.as_real().real_flag());
  CHECK_THROWS_AS((s + z(4)).as_real(), domain_error);
  CHECK(conjugate(z(3)) == zb(3));
  CHECK(conjugate(z(3) * GaussianRational::i()) == zb(3) * GaussianRational(0, -1));
}

TEST_CASE("elementary functions at known values") {
  const TruncatedSeries w = z(4) * zb(4);
  CHECK(exp(-w) == parse_expression("1 - z*zb + 1/2*z^2*zb^2", 4));
  CHECK(pow(w + GaussianRational(1), -2) == parse_expression("1 - 2*z*zb + 3*z^2*zb^2", 4));
  CHECK(log1p(w) == parse_expression("z*zb - 1/2*z^2*zb^2", 4));
  CHECK(sqrt(pow(z(5) + GaussianRational(1), 2)) == z(5) + GaussianRational(1));
  CHECK(sqrt(TruncatedSeries::constant(q(9, 4), 3)) == TruncatedSeries::constant(q(3, 2), 3));
  CHECK(elementary(w, ElementaryFn::exp) == exp(w));
  CHECK(pow(z(4), 0) == TruncatedSeries::constant(q(1), 4));
}

TEST_CASE("elementary function domain errors") {
  const TruncatedSeries one = TruncatedSeries::constant(q(1), 4);
  CHECK_THROWS_AS(exp(one), domain_error);
  CHECK_THROWS_AS(log1p(one), domain_error);
  CHECK_THROWS_AS(reciprocal(z(4)), domain_error);
  CHECK_THROWS_AS(sqrt(TruncatedSeries::constant(q(2), 4)), domain_error);
  CHECK_THROWS_AS(sqrt(TruncatedSeries::constant(q(-1), 4)), domain_error);
  CHECK_THROWS_AS(pow(z(4), -1), domain_error);
}

TEST_CASE("numeric evaluation") {
  const TruncatedSeries s = parse_expression("1 + 2*z + i*zb^2", 3);
  const auto v = evaluate(s, {0.5, 0.25});
  const std::complex<double> zz(0.5, 0.25);
  const auto expect = 1.0 + 2.0 * zz + std::complex<double>(0, 1) * std::conj(zz) * std::conj(zz);
  CHECK(std::abs(v - expect) < 1e-15);
}

TEST_CASE("randomized algebraic laws") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 8;
    const auto a = test::random_series(rng, n);
    const auto b = test::random_series(rng, n);
    const auto c = test::random_series(rng, n);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(D(a * b) == D(a) * b + a * D(b));
    CHECK(Dbar(a * b) == Dbar(a) * b + a * Dbar(b));
    CHECK(conjugate(conjugate(a)) == a);
    CHECK(conjugate(a * b) == conjugate(a) * conjugate(b));
    CHECK(conjugate(D(a)) == Dbar(conjugate(a)));
    TruncatedSeries a0 = a;
    a0.set_coeff(0, 0, GaussianRational());
    CHECK(log1p(exp(a0) - GaussianRational(1)) == a0);
    CHECK(exp(log1p(a0)) == a0 + GaussianRational(1));
    CHECK(exp(a0) * exp(-a0) == TruncatedSeries::constant(GaussianRational(1), n));
    TruncatedSeries unit = a;
    unit.set_coeff(0, 0, GaussianRational(1));
    CHECK(unit * reciprocal(unit) == TruncatedSeries::constant(GaussianRational(1), n));
    CHECK(pow(sqrt(unit), 2) == unit);
    CHECK(pow(unit, -3) * pow(unit, 3) == TruncatedSeries::constant(GaussianRational(1), n));
  }
}

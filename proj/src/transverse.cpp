#include "crinv/transverse.hpp"

#include "crinv/errors.hpp"

namespace crinv {

TruncatedSeries PseudohermitianChart::levi_normalization_residual() const {
  // d(e^{-2phi}) ^ theta_0 = -e^{2phi} theta ^ (D(e^{-2phi}) theta^1 + Dbar(e^{-2phi}) theta^1bar)
  const TruncatedSeries theta_theta1 = -(base_.e2phi() * D(base_.em2phi()));
  return theta_theta1 - base_.b();
}

FiberPoint::FiberPoint(GaussianRational lambda, GaussianRational mu) : lambda_(std::move(lambda)), mu_(std::move(mu)) {
  if (lambda_.is_zero()) throw invalid_fiber_point_error("fiber coordinate lambda must be nonzero");
}

TruncatedSeries scalar_curvature_R(const PseudohermitianChart& chart) {
  const SurfaceChart& c = chart.base();
  if (c.order() < 2) throw insufficient_order_error("R needs order >= 2");
  // 2 D Dbar phi = Dbar b
  return (-(c.em2phi() * Dbar(c.b()))).as_real();
}

ConnectionForms connection_form_coefficients(const PseudohermitianChart& chart) {
  const SurfaceChart& c = chart.base();
  const GaussianRational half(Rational(1, 2));
  ConnectionForms out{c.b(), -(c.b() * half), c.bbar() * half, -1};
  if (conjugate(out.unitary_theta1) != -out.unitary_theta1bar)
    throw inconsistency_error("unitary connection form is not skew-hermitian");
  return out;
}

TruncatedSeries apply_L1(const TruncatedSeries& f) { return D(f); }

ScaledSeries q_representative(const PseudohermitianChart& chart, const FiberPoint& p) {
  const GaussianRational& lam = p.lambda();
  const GaussianRational lb = lam.conj();
  return {cartan_r(chart.base()), GaussianRational(1) / (lam * lb * lb * lb)};
}

ScaledSeries q1_representative(const PseudohermitianChart& chart, const FiberPoint& p) {
  const TruncatedSeries r = cartan_r(chart.base());
  const GaussianRational& lam = p.lambda();
  const GaussianRational lb = lam.conj();
  TruncatedSeries series = apply_L1(r) - r * chart.base().b() + r * (GaussianRational::i() * p.mu().conj());
  return {std::move(series), GaussianRational(1) / (lam * lam * lb * lb * lb)};
}

ScaledSeries q11_representative(const PseudohermitianChart& chart, const FiberPoint& p) {
  const SurfaceChart& c = chart.base();
  const TruncatedSeries r = cartan_r(c);
  const TruncatedSeries& b = c.b();
  const TruncatedSeries l1r = apply_L1(r);
  TruncatedSeries s = apply_L1(l1r) - l1r * b * GaussianRational(3) + r * (b * b * GaussianRational(2) - apply_L1(b));
  if (s != cartan_s(c)) throw inconsistency_error("L_1 form of s disagrees with cartan_s");
  const Rational n = p.lambda().norm();
  return {std::move(s), GaussianRational(Rational(1) / (n * n * n))};
}

CartanCoefficients standard_cartan_coefficients() {
  using P = BracketPolynomial;
  const P b = P::var(BracketVar::b);
  const P bbar = P::var(BracketVar::bbar);
  const P mu = P::var(BracketVar::mu);
  const P mubar = P::var(BracketVar::mubar);
  const P i(GaussianRational::i());
  return {-(b + P(2) * i * mubar), -(i * mu), -(mu * (bbar - i * mu))};
}

BracketReport bracket_residual(const CartanCoefficients& coefficients) {
  using P = BracketPolynomial;
  const P b = P::var(BracketVar::b);
  const P mubar = P::var(BracketVar::mubar);
  const P x = P::var(BracketVar::L1r);
  const P r = P::var(BracketVar::r);
  const P i(GaussianRational::i());
  BracketReport out;
  out.lhs = (x - r * b + i * r * mubar) * (P(2) * coefficients.A + P(3) * coefficients.B.conj()) -
            i * r * coefficients.E.conj();
  out.rhs = P(-2) * x * b + P(2) * r * b * b - i * x * mubar;
  out.residual = out.lhs - out.rhs;
  return out;
}

BracketReport verify_bracket_identity() { return bracket_residual(standard_cartan_coefficients()); }

TransResiduals check_qisgauss_trans(const PseudohermitianChart& chart) {
  const SurfaceChart& c = chart.base();
  const TruncatedSeries R = scalar_curvature_R(chart);
  const auto r_bb = covariant_derivative_weighted(R, {Var::zbar, Var::zbar}, c);
  const auto r_bbzz = covariant_derivative_weighted(R, {Var::zbar, Var::zbar, Var::z, Var::z}, c);
  return {cartan_r(c) * GaussianRational(6) + resolve(times_e2phi(r_bb, 2), c),
          cartan_s(c) * GaussianRational(6) + resolve(times_e2phi(r_bbzz, 3), c)};
}

}  // namespace crinv

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "crinv/coeff_file.hpp"
#include "crinv/expression.hpp"
#include "crinv/quadrature.hpp"
#include "support.hpp"

using namespace crinv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "failed: " + what;
    }
  }
};

Rational rat(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

SurfaceChart direct(const TruncatedSeries& e2phi) { return SurfaceChart(e2phi.as_real(), ChartProvenance::direct); }

Outcome exact_identity_corpus() {
  Outcome o;
  const int n = 14;
  std::vector<std::pair<std::string, SurfaceChart>> corpus;
  corpus.emplace_back("flat", direct(parse_expression("1", n)));
  corpus.emplace_back("round", direct(parse_expression("(1+z*zb)^-2", n)));
  corpus.emplace_back("1+z*zb", direct(parse_expression("1+z*zb", n)));
  std::mt19937 rng(20261018);
  for (int i = 0; i < 3; ++i) corpus.emplace_back("random_" + std::to_string(i), direct(test::random_real_e2phi(rng, n, n)));
  corpus.emplace_back("F_1/10", phi_from_rigid_defining(parse_expression("z*zb + 1/10*z^4*zb^4", n)));
  corpus.emplace_back("F_1/16", phi_from_rigid_defining(parse_expression("z*zb + 1/16*z^4*zb^4", n)));
  for (const auto& [name, chart] : corpus) {
    const GaussIdentityResiduals g = check_qisgauss(chart);
    const PseudohermitianChart ph(chart);
    const TransResiduals t = check_qisgauss_trans(ph);
    o.require(g.q_residual.is_zero(), name + " QisGauss r");
    o.require(g.q11_residual.is_zero(), name + " QisGauss s");
    o.require(g.divergence_residual.is_zero(), name + " divergence form");
    o.require(t.q_residual.is_zero(), name + " QisGauss-trans r");
    o.require(t.q11_residual.is_zero(), name + " QisGauss-trans s");
    o.require((gauss_curvature(chart) - scalar_curvature_R(ph) * GaussianRational(2)).is_zero(), name + " K = 2R");
  }
  if (o.pass) o.detail = std::to_string(corpus.size()) + " charts at N = 14, 6 exact residuals each";
  return o;
}

Outcome bracket() {
  Outcome o;
  o.require(verify_bracket_identity().is_zero(), "residual is not zero");
  CartanCoefficients perturbed = standard_cartan_coefficients();
  perturbed.A = -(BracketPolynomial::var(BracketVar::b) +
                  BracketPolynomial(GaussianRational::i()) * BracketPolynomial::var(BracketVar::mubar));
  const BracketReport control = bracket_residual(perturbed);
  o.require(!control.is_zero(), "negative control not detected");
  if (o.pass) o.detail = "residual 0; perturbed control residual " + to_string(control.residual);
  return o;
}

Outcome calibration() {
  Outcome o;
  const std::vector<Rational> base{rat(1, 10), rat(1, 16), rat(1, 25)};
  const CalibrationResult c = calibrate_c(base);
  o.require(c.c_value == GaussianRational(96), "c = " + to_string(c.c_value));
  o.require(c.interpolated_polynomial.front().is_zero(), "nonzero constant term");
  std::vector<Rational> more = base;
  more.push_back(rat(1, 32));
  const CalibrationResult c4 = calibrate_c(more);
  o.require(c4.c_value == c.c_value, "unstable with 1/32 added");
  const CalibrationResult control = calibrate_c(base, a24_family());
  o.require(control.c_value.is_zero(), "A24 control = " + to_string(control.c_value));
  if (o.pass) o.detail = "c = 96, stable with 1/32, A24 control 0";
  return o;
}

Outcome sphericity() {
  Outcome o;
  const SurfaceChart c = direct(parse_expression("1+z*zb", 14));
  const SphericityVerdict v = is_spherical(c, 10);
  o.require(!v.spherical && v.first_nonzero == Exponent{2, 0}, "first nonzero r at (2,0)");
  o.require(v.first_nonzero_value == GaussianRational(rat(5, 2)), "r_20 = 5/2");
  o.require(cartan_s(c).constant_term() == GaussianRational(5), "s(0) = 5");
  for (const char* e : {"(1+z*zb)^-2", "1"}) {
    const SphericityVerdict s = is_spherical(direct(parse_expression(e, 14)), 10);
    o.require(s.spherical && s.verified_through >= 10, std::string(e) + " spherical through 10");
  }
  if (o.pass) o.detail = "r_20 = 5/2, s(0) = 5, round and flat spherical through 10";
  return o;
}

Outcome weight3() {
  Outcome o;
  const Weight3Report w = weight3_invariance_suite(RigidSurface(parse_expression("z*zb + 1/10*z^4*zb^4", 12)));
  for (const auto& check : w.checks)
    o.require(check.residual.is_zero(), "|lambda|^2 = " + to_string(check.t));
  o.require(w.checks.size() == 3, "three scalings");
  if (o.pass) o.detail = "Q_{;11}(0) = " + to_string(w.base_value) + ", exact |lambda|^-6 for |lambda|^2 = 4, 9/4";
  return o;
}

Outcome quadrature() {
  Outcome o;
  const QuadratureScheme scheme;
  const QuadratureScheme doubled = scheme.refined();
  const auto one = [](std::complex<double>) { return 1.0; };
  const auto converged = [&](const Integral& base, const Integral& finer, const std::string& what) {
    o.require(std::abs(finer.value - base.value) <= base.error_estimate, "doubling moved " + what);
  };

  const CompactMetric fs;
  const Integral area = integrate_surface(one, fs, scheme);
  o.require(std::abs(area.value - std::numbers::pi) < 1e-10, "Fubini-Study area");
  converged(area, integrate_surface(one, fs, doubled), "area");

  const std::vector<CompactMetric> metrics{fs, CompactMetric({rat(0, 1), rat(1, 10), rat(-1, 10)}),
                                           CompactMetric({rat(0, 1), rat(0, 1), rat(1, 100)})};
  const std::vector<CompactFunction> functions{CompactFunction::curvature(),
                                               CompactFunction::u_polynomial({0, 1}, "u")};
  double worst = 0;
  for (const CompactMetric& m : metrics) {
    for (const CompactFunction& f : functions) {
      const CalabiCheck c = calabi_identity_check(f, m, scheme);
      const std::string tag = f.name + " on " + m.describe();
      worst = std::max(worst, c.relative_residual);
      o.require(c.passed, "Calabi " + tag);
      o.require(c.lhs.value >= -1e-12, "positivity " + tag);
      const CalabiCheck d = calabi_identity_check(f, m, doubled);
      converged(c.lhs, d.lhs, "lhs " + tag);
      converged(c.rhs, d.rhs, "rhs " + tag);
    }
    for (double tol : {1e-8, 1e-10}) {
      QuadratureScheme s = scheme;
      s.sphericity_tolerance = tol;
      const RigidityReport r = rigidity_demo(m, s);
      o.require(r.consistent, "rigidity verdict " + m.describe());
    }
  }
  if (o.pass) {
    std::ostringstream os;
    os << "area error " << std::abs(area.value - std::numbers::pi) << ", worst Calabi residual " << worst
       << ", verdicts consistent at 1e-8 and 1e-10";
    o.detail = os.str();
  }
  return o;
}

Outcome series_properties() {
  Outcome o;
  std::mt19937 rng(1000);
  const GaussianRational one(1);
  int ring = 0, leibniz = 0, conj = 0, explog = 0, file = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = i % 11;
    const auto a = test::random_series(rng, n);
    const auto b = test::random_series(rng, n);
    const auto c = test::random_series(rng, n);
    ring += a * (b + c) == a * b + a * c && (a * b) * c == a * (b * c) && a * b == b * a && (a + b) - b == a;
    leibniz += n == 0 || (D(a * b) == D(a) * b + a * D(b) && Dbar(a * b) == Dbar(a) * b + a * Dbar(b));
    conj += conjugate(a * b) == conjugate(a) * conjugate(b) && conjugate(conjugate(a)) == a &&
            (n == 0 || conjugate(D(a)) == Dbar(conjugate(a)));
    TruncatedSeries a0 = a;
    a0.set_coeff(0, 0, GaussianRational());
    explog += log1p(exp(a0) - one) == a0 && exp(log1p(a0)) == a0 + one;
    std::stringstream buf;
    write_coeff_file(a, buf);
    file += read_coeff_file(buf) == a;
  }
  o.require(ring == 1000, "ring axioms " + std::to_string(ring) + "/1000");
  o.require(leibniz == 1000, "Leibniz " + std::to_string(leibniz) + "/1000");
  o.require(conj == 1000, "conjugation " + std::to_string(conj) + "/1000");
  o.require(explog == 1000, "exp/log " + std::to_string(explog) + "/1000");
  o.require(file == 1000, "file round trip " + std::to_string(file) + "/1000");
  if (o.pass) o.detail = "5 x 1000 randomized cases at N <= 10";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "exact identity corpus", 30, exact_identity_corpus},
      {2, "bracket identity", 1, bracket},
      {3, "calibration c = 96", 30, calibration},
      {4, "sphericity regression", 30, sphericity},
      {5, "weight-3 scaling", 30, weight3},
      {6, "quadrature", 60, quadrature},
      {7, "series property suite", 30, series_properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " (" << timing << ") "
              << o.detail << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}

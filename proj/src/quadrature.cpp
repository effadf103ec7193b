#include "crinv/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "crinv/errors.hpp"

namespace crinv {

// ---------------------------------------------------------------------------
// RadialJet

RadialJet::RadialJet(double rho0, int degree)
    : rho0_(rho0), c_(static_cast<std::size_t>(std::max(degree, 0)) + 1, 0.0L) {
  if (degree < 0) throw std::invalid_argument("negative jet degree");
}

RadialJet RadialJet::constant(double rho0, int degree, double value) {
  RadialJet j(rho0, degree);
  j.c_[0] = value;
  return j;
}

RadialJet RadialJet::variable(double rho0, int degree) {
  RadialJet j(rho0, degree);
  j.c_[0] = rho0;
  if (degree >= 1) j.c_[1] = 1;
  return j;
}

RadialJet RadialJet::derivative() const {
  if (degree() < 1) throw insufficient_order_error("jet degree exhausted");
  RadialJet d(rho0_, degree() - 1);
  for (int j = 0; j <= d.degree(); ++j) d.c_[j] = (j + 1) * c_[j + 1];
  return d;
}

RadialJet& RadialJet::operator+=(const RadialJet& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

RadialJet& RadialJet::operator-=(const RadialJet& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

RadialJet& RadialJet::operator+=(double c) {
  c_[0] += c;
  return *this;
}

RadialJet& RadialJet::operator*=(double s) {
  for (auto& x : c_) x *= s;
  return *this;
}

RadialJet operator*(const RadialJet& a, const RadialJet& b) {
  const int n = std::min(a.degree(), b.degree());
  RadialJet out(a.rho0(), n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  return out;
}

RadialJet exp(const RadialJet& t) {
  const int n = t.degree();
  RadialJet out(t.rho0(), n);
  out.c_[0] = std::exp(t.c_[0]);
  for (int j = 1; j <= n; ++j) {
    long double acc = 0;
    for (int i = 1; i <= j; ++i) acc += i * t.c_[i] * out.c_[j - i];
    out.c_[j] = acc / j;
  }
  return out;
}

RadialJet log(const RadialJet& t) {
  if (!(t.c_[0] > 0)) throw domain_error("log of a jet with non-positive value");
  const int n = t.degree();
  RadialJet out(t.rho0(), n);
  out.c_[0] = std::log(t.c_[0]);
  // t * L' = t'
  for (int j = 1; j <= n; ++j) {
    long double acc = j * t.c_[j];
    for (int i = 1; i < j; ++i) acc -= (j - i) * out.c_[j - i] * t.c_[i];
    out.c_[j] = acc / (j * t.c_[0]);
  }
  return out;
}

RadialJet reciprocal(const RadialJet& t) {
  if (t.c_[0] == 0) throw domain_error("reciprocal of a jet with zero value");
  const int n = t.degree();
  RadialJet out(t.rho0(), n);
  out.c_[0] = 1 / t.c_[0];
  for (int j = 1; j <= n; ++j) {
    long double acc = 0;
    for (int i = 1; i <= j; ++i) acc += t.c_[i] * out.c_[j - i];
    out.c_[j] = -acc / t.c_[0];
  }
  return out;
}

// ---------------------------------------------------------------------------
// RadialField

std::complex<double> RadialField::at(std::complex<double> z) const {
  std::complex<double> w = charge >= 0 ? z : std::conj(z);
  std::complex<double> p = 1.0;
  for (int i = 0; i < std::abs(charge); ++i) p *= w;
  return p * h.value();
}

RadialField operator+(const RadialField& a, const RadialField& b) {
  if (a.charge != b.charge) throw std::logic_error("adding fields of different charge");
  return {a.charge, a.h + b.h};
}

RadialField operator-(const RadialField& a, const RadialField& b) {
  if (a.charge != b.charge) throw std::logic_error("subtracting fields of different charge");
  return {a.charge, a.h - b.h};
}

RadialField operator*(const RadialField& a, const RadialField& b) {
  RadialJet h = a.h * b.h;
  // z^p zbar^q = z^{p-q} rho^q (p >= q) or zbar^{q-p} rho^p
  if ((a.charge > 0 && b.charge < 0) || (a.charge < 0 && b.charge > 0)) {
    const int common = std::min(std::abs(a.charge), std::abs(b.charge));
    const RadialJet rho = RadialJet::variable(h.rho0(), h.degree());
    for (int i = 0; i < common; ++i) h = h * rho;
  }
  return {a.charge + b.charge, std::move(h)};
}

RadialField operator*(double s, RadialField a) {
  a.h *= s;
  return a;
}

RadialField differentiate(const RadialField& f, Var v) {
  const int n = f.charge;
  const RadialJet dh = f.h.derivative();
  const RadialJet rho = RadialJet::variable(f.h.rho0(), dh.degree());
  if (v == Var::z) {
    // D(z^n h) = z^{n-1}(n h + rho h');  D(zbar^m h) = zbar^{m+1} h'
    if (n > 0) return {n - 1, static_cast<double>(n) * f.h + rho * dh};
    return {n - 1, dh};
  }
  if (n >= 0) return {n + 1, dh};
  return {n + 1, static_cast<double>(-n) * f.h + rho * dh};
}

// ---------------------------------------------------------------------------
// CompactMetric

namespace {

/// Coefficients of p(1 - u) from those of p(u).
template <class T>
std::vector<T> reflect_polynomial(const std::vector<T>& c) {
  std::vector<T> out(c.size(), T(0));
  for (std::size_t j = 0; j < c.size(); ++j) {
    T binom(1);
    for (std::size_t k = 0; k <= j; ++k) {
      const T term = c[j] * binom;
      out[k] += (k % 2 == 0) ? term : T(-term);
      binom = binom * T(static_cast<double>(j - k)) / T(static_cast<double>(k + 1));
    }
  }
  return out;
}

}  // namespace

CompactMetric::CompactMetric(std::vector<Rational> psi) : psi_(std::move(psi)) {
  for (const auto& c : psi_) psi_d_.push_back(c.get_d());
}

std::string CompactMetric::describe() const {
  std::ostringstream os;
  os << "psi(u) =";
  bool any = false;
  for (std::size_t j = 0; j < psi_.size(); ++j) {
    if (sgn(psi_[j]) == 0) continue;
    os << (any ? " + " : " ") << "(" << to_string(psi_[j]) << ")";
    if (j > 0) os << "*u" << (j > 1 ? "^" + std::to_string(j) : "");
    any = true;
  }
  if (!any) os << " 0";
  return os.str();
}

double CompactMetric::psi_at(double u) const {
  double acc = 0;
  for (auto it = psi_d_.rbegin(); it != psi_d_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

double CompactMetric::e2phi(std::complex<double> z) const {
  const double rho = std::norm(z);
  const double u = rho / (1 + rho);
  return std::exp(2 * psi_at(u)) / ((1 + rho) * (1 + rho));
}

RadialJet CompactMetric::phi_jet(double rho0, int degree) const {
  const RadialJet rho = RadialJet::variable(rho0, degree);
  const RadialJet one_plus = RadialJet::constant(rho0, degree, 1.0) + rho;
  const RadialJet u = rho * reciprocal(one_plus);
  RadialJet psi = RadialJet::constant(rho0, degree, 0.0);
  for (auto it = psi_d_.rbegin(); it != psi_d_.rend(); ++it) psi = psi * u + RadialJet::constant(rho0, degree, *it);
  return psi - log(one_plus);
}

SurfaceChart CompactMetric::symbolic_chart(int order) const {
  const TruncatedSeries zz = TruncatedSeries::monomial(1, 1, 1, order);
  const TruncatedSeries one_plus = zz + GaussianRational(1);
  const TruncatedSeries u = zz * reciprocal(one_plus);
  TruncatedSeries psi(order);
  TruncatedSeries u_power = u;
  for (std::size_t j = 1; j < psi_.size(); ++j) {
    psi += u_power * GaussianRational(psi_[j]);
    u_power = u_power * u;
  }
  const TruncatedSeries e2phi = pow(one_plus, -2) * exp(psi * GaussianRational(2));
  return SurfaceChart(e2phi.as_real(), ChartProvenance::direct);
}

// ---------------------------------------------------------------------------
// NumericChart

NumericChart::NumericChart(const CompactMetric& metric, std::complex<double> z, int max_letters) : z_(z) {
  // K uses two derivatives of phi, each letter one more, plus one for D phi.
  const int degree = 2 * max_letters + 4;
  const double rho0 = std::norm(z);
  phi_ = {0, metric.phi_jet(rho0, degree)};
  dphi_ = differentiate(phi_, Var::z);
  dbarphi_ = differentiate(phi_, Var::zbar);
  emphi_ = exp(-1.0 * phi_.h);
}

RadialField NumericChart::gauss_curvature() const {
  const RadialField e_m2phi{0, emphi_ * emphi_};
  return -4.0 * (e_m2phi * differentiate(dbarphi_, Var::z));
}

RadialField NumericChart::u() const {
  const double rho0 = phi_.h.rho0();
  const int degree = phi_.h.degree();
  const RadialJet rho = RadialJet::variable(rho0, degree);
  return {0, rho * reciprocal(RadialJet::constant(rho0, degree, 1.0) + rho)};
}

RadialField NumericChart::covariant_derivative(const RadialField& f, const CovariantWord& word) const {
  RadialField g = f;
  const RadialField emphi{0, emphi_};
  int k = 0;
  int l = 0;
  for (const Var letter : word.letters()) {
    RadialField next = differentiate(g, letter);
    if (letter == Var::z) {
      if (l != k) next = next + static_cast<double>(l - k) * (dphi_ * g);
      ++k;
    } else {
      if (k != l) next = next + static_cast<double>(k - l) * (dbarphi_ * g);
      ++l;
    }
    g = emphi * next;
  }
  return g;
}

std::complex<double> numeric_cartan_r(const CompactMetric& metric, std::complex<double> z) {
  const NumericChart chart(metric, z, 2);
  const RadialField kbb = chart.covariant_derivative(chart.gauss_curvature(), {Var::zbar, Var::zbar});
  const double e2 = metric.e2phi(z);
  return -(e2 * e2 / 12.0) * kbb.at(z);
}

// ---------------------------------------------------------------------------
// Quadrature

QuadratureScheme QuadratureScheme::refined() const {
  QuadratureScheme s = *this;
  s.radial_panels *= 2;
  s.angular_nodes *= 2;
  return s;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre needs n >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1;
      dp = n * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1 - x * x) * dp * dp);
  }
}

namespace {

/// Neumaier compensated sum, fed in a fixed order.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
    abs_ += std::abs(x);
  }
  double value() const { return sum_ + comp_; }
  double abs_total() const { return abs_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
  double abs_ = 0;
};

struct RawIntegral {
  double value;
  double abs_total;
};

/// Calls visit(u, r, w) for each node of the composite Gauss-Legendre rule in
/// u, where r = |z| and w includes the u-density of the area form.
template <class Visit>
void for_each_radial_node(const CompactMetric& metric, int panels, int per_panel, Visit&& visit) {
  std::vector<double> x, w;
  gauss_legendre(per_panel, x, w);
  for (int p = 0; p < panels; ++p) {
    const double a = static_cast<double>(p) / panels;
    const double h = 1.0 / panels;
    for (int i = 0; i < per_panel; ++i) {
      const double u = a + h * (x[i] + 1) / 2;
      const double density = 0.5 * std::exp(2 * metric.psi_at(u));
      if (!std::isfinite(density) || density <= 0)
        throw evaluation_error("metric density not positive at u = " + std::to_string(u));
      visit(u, std::sqrt(u / (1 - u)), w[i] * h / 2 * density);
    }
  }
}

void require_finite(double v, double u, std::complex<double> z, int theta_index) {
  if (std::isfinite(v)) return;
  std::ostringstream os;
  os << "non-finite integrand at node (u = " << u << ", theta index " << theta_index << ", z = " << z << ")";
  throw evaluation_error(os.str());
}

RawIntegral integrate_once(const SurfaceIntegrand& f, const CompactMetric& metric, int panels, int per_panel,
                           int angular) {
  if (per_panel * panels < 16 || angular < 16) throw std::invalid_argument("quadrature node counts must be >= 16");
  const double dtheta = 2 * std::numbers::pi / angular;
  CompensatedSum sum;
  for_each_radial_node(metric, panels, per_panel, [&](double u, double r, double weight) {
    for (int j = 0; j < angular; ++j) {
      const std::complex<double> z = std::polar(r, j * dtheta);
      const double v = f(z);
      require_finite(v, u, z, j);
      sum.add(weight * dtheta * v);
    }
  });
  return {sum.value(), sum.abs_total()};
}

struct RawRadialIntegral {
  double value;
  double abs_total;
  double noise;
};

RawRadialIntegral integrate_radial_once(const RadialIntegrand& f, const CompactMetric& metric, int panels,
                                        int per_panel, int angular) {
  if (per_panel * panels < 16 || angular < 16) throw std::invalid_argument("quadrature node counts must be >= 16");
  CompensatedSum sum;
  double noise = 0;
  for_each_radial_node(metric, panels, per_panel, [&](double u, double r, double weight) {
    const double v = f(r);
    require_finite(v, u, r, 0);
    const double r_next = std::nextafter(r, std::numeric_limits<double>::infinity());
    const double v_next = f(r_next);
    require_finite(v_next, u, r_next, 0);
    sum.add(2 * std::numbers::pi * weight * v);
    noise += 2 * std::numbers::pi * weight * std::abs(v - v_next);
  });
  return {sum.value(), sum.abs_total(), noise};
}

}  // namespace

Integral integrate_surface(const SurfaceIntegrand& integrand, const CompactMetric& metric,
                           const QuadratureScheme& scheme) {
  const RawIntegral coarse =
      integrate_once(integrand, metric, scheme.radial_panels, scheme.points_per_panel, scheme.angular_nodes);
  const QuadratureScheme fine_scheme = scheme.refined();
  const RawIntegral fine = integrate_once(integrand, metric, fine_scheme.radial_panels, fine_scheme.points_per_panel,
                                          fine_scheme.angular_nodes);
  const double roundoff = 64 * std::numeric_limits<double>::epsilon() * fine.abs_total;
  return {fine.value, std::abs(fine.value - coarse.value) + roundoff};
}

Integral integrate_radial(const RadialIntegrand& integrand, const CompactMetric& metric,
                          const QuadratureScheme& scheme) {
  const RawRadialIntegral coarse = integrate_radial_once(integrand, metric, scheme.radial_panels,
                                                         scheme.points_per_panel, scheme.angular_nodes);
  const QuadratureScheme fine_scheme = scheme.refined();
  const RawRadialIntegral fine = integrate_radial_once(integrand, metric, fine_scheme.radial_panels,
                                                       fine_scheme.points_per_panel, fine_scheme.angular_nodes);
  const double roundoff = 64 * std::numeric_limits<double>::epsilon() * fine.abs_total;
  return {fine.value, std::abs(fine.value - coarse.value) + roundoff + fine.noise};
}

Integral integrate_circle_bundle(const SurfaceIntegrand& integrand, const CompactMetric& metric,
                                 const QuadratureScheme& scheme) {
  Integral a = integrate_surface(integrand, metric, scheme);
  a.value *= 2 * std::numbers::pi;
  a.error_estimate *= 2 * std::numbers::pi;
  return a;
}

CompactFunction CompactFunction::u_polynomial(std::vector<double> coeffs, std::string name) {
  return {Kind::u_polynomial, std::move(coeffs), std::move(name)};
}

CompactMetric CompactMetric::reflected() const { return CompactMetric(reflect_polynomial(psi_)); }

CompactFunction CompactFunction::reflected() const {
  CompactFunction out = *this;
  out.u_coeffs = reflect_polynomial(u_coeffs);
  return out;
}

RadialField CompactFunction::field(const NumericChart& chart) const {
  if (kind == Kind::gauss_curvature) return chart.gauss_curvature();
  const RadialField u = chart.u();
  RadialField acc{0, RadialJet::constant(u.h.rho0(), u.h.degree(), 0.0)};
  for (auto it = u_coeffs.rbegin(); it != u_coeffs.rend(); ++it) {
    acc = acc * u;
    acc.h += *it;
  }
  return acc;
}

CalabiCheck calabi_identity_check(const CompactFunction& f, const CompactMetric& metric, const QuadratureScheme& scheme) {
  const CovariantWord two{Var::zbar, Var::zbar};
  const CovariantWord four{Var::zbar, Var::zbar, Var::z, Var::z};
  // Both integrands are rotation-invariant scalars. Outside the unit disc they are evaluated in
  // the chart w = 1/z, which keeps |w| <= 1 and avoids cancellation in the jets.
  const CompactMetric outer_metric = metric.reflected();
  const CompactFunction outer_f = f.reflected();
  auto in_best_chart = [&](double r, auto&& body) {
    const std::complex<double> z(r, 0.0);
    if (r <= 1) return body(NumericChart(metric, z), f, z);
    const std::complex<double> w = 1.0 / z;
    return body(NumericChart(outer_metric, w), outer_f, w);
  };
  CalabiCheck out;
  out.lhs = integrate_radial(
      [&](double r) {
        return in_best_chart(r, [&](const NumericChart& chart, const CompactFunction& g, std::complex<double> p) {
          const RadialField d2 = chart.covariant_derivative(g.field(chart), two);
          return std::norm(d2.at(p));
        });
      },
      metric, scheme);
  out.rhs = integrate_radial(
      [&](double r) {
        return in_best_chart(r, [&](const NumericChart& chart, const CompactFunction& g, std::complex<double> p) {
          const RadialField field = g.field(chart);
          const RadialField d4 = chart.covariant_derivative(field, four);
          return (d4.at(p) * field.at(p)).real();
        });
      },
      metric, scheme);
  const double area = integrate_surface([](std::complex<double>) { return 1.0; }, metric, scheme).value;
  const double f2 = integrate_radial(
                        [&](double r) {
                          return in_best_chart(r, [](const NumericChart& chart, const CompactFunction& g,
                                                     std::complex<double> p) { return std::norm(g.field(chart).at(p)); });
                        },
                        metric, scheme)
                        .value;
  out.natural_scale = f2 / (area * area);
  const double scale =
      std::max({std::abs(out.lhs.value), std::abs(out.rhs.value), scheme.zero_floor * out.natural_scale});
  out.relative_residual = std::abs(out.lhs.value - out.rhs.value) / scale;
  out.passed = out.relative_residual < scheme.identity_tolerance && out.lhs.value >= -scheme.identity_tolerance;
  return out;
}

RigidityReport rigidity_demo(const CompactMetric& metric, const QuadratureScheme& scheme, int symbolic_order) {
  RigidityReport out;
  const CalabiCheck c = calabi_identity_check(CompactFunction::curvature(), metric, scheme);
  out.i2 = c.lhs;
  out.i4 = c.rhs;
  out.relative_residual = c.relative_residual;
  out.numeric_spherical = out.i2.value < scheme.sphericity_tolerance;
  const SurfaceChart chart = metric.symbolic_chart(symbolic_order);
  out.symbolic_order = symbolic_order - 4;
  out.symbolic_spherical = is_spherical(chart, out.symbolic_order).spherical;
  out.consistent = out.numeric_spherical == out.symbolic_spherical;
  return out;
}

}  // namespace crinv

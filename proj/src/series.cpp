#include "crinv/series.hpp"

#include <algorithm>
#include <string>

#include "crinv/errors.hpp"

namespace crinv {

namespace {

const GaussianRational& zero_coeff() {
  static const GaussianRational z;
  return z;
}

struct Term {
  int k;
  int l;
  const GaussianRational* c;
};

std::vector<Term> nonzero_terms(const TruncatedSeries& s, bool skip_constant) {
  std::vector<Term> out;
  for (int d = skip_constant ? 1 : 0; d <= s.order(); ++d)
    for (int l = 0; l <= d; ++l) {
      const auto& c = s.coeff(d - l, l);
      if (!c.is_zero()) out.push_back({d - l, l, &c});
    }
  return out;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0) throw domain_error("negative truncation order " + std::to_string(order));
  c_.resize(size_for(order));
  real_ = true;
}

TruncatedSeries TruncatedSeries::constant(const GaussianRational& c, int order) {
  TruncatedSeries s(order);
  s.c_[0] = c;
  s.real_ = c.is_real();
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int k, int l, const GaussianRational& c, int order) {
  TruncatedSeries s(order);
  if (k < 0 || l < 0) throw domain_error("negative exponent");
  if (k + l <= order) s.c_[index(k, l)] = c;
  s.real_ = s.has_real_symmetry();
  return s;
}

TruncatedSeries TruncatedSeries::from_terms(int order, const std::map<Exponent, GaussianRational>& terms) {
  TruncatedSeries s(order);
  for (const auto& [e, c] : terms) {
    if (e.first < 0 || e.second < 0) throw domain_error("negative exponent");
    if (e.first + e.second > order)
      throw domain_error("exponent (" + std::to_string(e.first) + ", " + std::to_string(e.second) +
                         ") exceeds order " + std::to_string(order));
    s.c_[index(e.first, e.second)] = c;
  }
  s.real_ = s.has_real_symmetry();
  return s;
}

const GaussianRational& TruncatedSeries::coeff(int k, int l) const {
  if (k < 0 || l < 0 || k + l > order_) return zero_coeff();
  return c_[index(k, l)];
}

void TruncatedSeries::set_coeff(int k, int l, const GaussianRational& c) {
  if (k < 0 || l < 0 || k + l > order_) throw domain_error("exponent exceeds order");
  c_[index(k, l)] = c;
  real_ = false;
}

std::map<Exponent, GaussianRational> TruncatedSeries::terms() const {
  std::map<Exponent, GaussianRational> out;
  for (int d = 0; d <= order_; ++d)
    for (int l = 0; l <= d; ++l)
      if (const auto& c = c_[index(d - l, l)]; !c.is_zero()) out.emplace(Exponent{d - l, l}, c);
  return out;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const GaussianRational& c) { return c.is_zero(); });
}

std::optional<Exponent> TruncatedSeries::lowest_term() const {
  for (int d = 0; d <= order_; ++d)
    for (int l = 0; l <= d; ++l)
      if (!c_[index(d - l, l)].is_zero()) return Exponent{d - l, l};
  return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > order_) throw insufficient_order_error("cannot raise order " + std::to_string(order_) + " to " + std::to_string(order));
  TruncatedSeries s(order);
  std::copy_n(c_.begin(), size_for(order), s.c_.begin());
  s.real_ = real_;
  return s;
}

bool TruncatedSeries::has_real_symmetry() const {
  for (int d = 0; d <= order_; ++d)
    for (int l = 0; l <= d; ++l)
      if (c_[index(d - l, l)] != c_[index(l, d - l)].conj()) return false;
  return true;
}

TruncatedSeries TruncatedSeries::as_real() const {
  if (!has_real_symmetry()) throw domain_error("series is not real: coeff(k, l) != conj(coeff(l, k))");
  TruncatedSeries s = *this;
  s.real_ = true;
  return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s = *this;
  for (auto& c : s.c_) c = -c;
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  real_ = real_ && o.real_;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  real_ = real_ && o.real_;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) { return *this = *this * o; }

TruncatedSeries& TruncatedSeries::operator*=(const GaussianRational& c) {
  for (auto& x : c_)
    if (!x.is_zero()) x *= c;
  real_ = real_ && c.is_real();
  return *this;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.order_ == b.order_ && a.c_ == b.c_; }

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  const auto ta = nonzero_terms(a, false);
  const auto tb = nonzero_terms(b, false);
  std::vector<GaussianRational> acc(TruncatedSeries::size_for(n));
  for (const auto& x : ta) {
    const int dx = x.k + x.l;
    if (dx > n) break;
    for (const auto& y : tb) {
      if (dx + y.k + y.l > n) break;
      acc[TruncatedSeries::index(x.k + y.k, x.l + y.l)].add_product(*x.c, *y.c);
    }
  }
  for (int d = 0; d <= n; ++d)
    for (int l = 0; l <= d; ++l) {
      auto& c = acc[TruncatedSeries::index(d - l, l)];
      if (!c.is_zero()) out.set_coeff(d - l, l, c);
    }
  return (a.real_flag() && b.real_flag()) ? out.as_real() : out;
}

TruncatedSeries operator*(TruncatedSeries a, const GaussianRational& c) { return a *= c; }
TruncatedSeries operator*(const GaussianRational& c, TruncatedSeries a) { return a *= c; }

TruncatedSeries operator+(TruncatedSeries a, const GaussianRational& c) {
  return a += TruncatedSeries::constant(c, a.order());
}

TruncatedSeries operator-(TruncatedSeries a, const GaussianRational& c) {
  return a -= TruncatedSeries::constant(c, a.order());
}

TruncatedSeries series_arith(const TruncatedSeries& lhs, const TruncatedSeries& rhs, ArithOp op) {
  if (lhs.order() != rhs.order())
    throw order_mismatch_error("operand orders differ: " + std::to_string(lhs.order()) + " vs " +
                               std::to_string(rhs.order()));
  switch (op) {
    case ArithOp::add: return lhs + rhs;
    case ArithOp::sub: return lhs - rhs;
    case ArithOp::mul: return lhs * rhs;
  }
  return lhs;
}

TruncatedSeries differentiate(const TruncatedSeries& s, Var v) {
  if (s.order() < 1) throw insufficient_order_error("cannot differentiate a series of order 0");
  TruncatedSeries out(s.order() - 1);
  for (int d = 1; d <= s.order(); ++d)
    for (int l = 0; l <= d; ++l) {
      const int k = d - l;
      const auto& c = s.coeff(k, l);
      if (c.is_zero()) continue;
      if (v == Var::z && k > 0)
        out.c_[TruncatedSeries::index(k - 1, l)] = c * GaussianRational(k);
      else if (v == Var::zbar && l > 0)
        out.c_[TruncatedSeries::index(k, l - 1)] = c * GaussianRational(l);
    }
  out.real_ = false;
  return out;
}

TruncatedSeries conjugate(const TruncatedSeries& s) {
  TruncatedSeries out(s.order());
  for (int d = 0; d <= s.order(); ++d)
    for (int l = 0; l <= d; ++l) out.c_[TruncatedSeries::index(d - l, l)] = s.coeff(l, d - l).conj();
  out.real_ = s.real_;
  return out;
}

TruncatedSeries exp(const TruncatedSeries& s) {
  if (!s.constant_term().is_zero()) throw domain_error("exp requires a zero constant term");
  const int n = s.order();
  const auto ts = nonzero_terms(s, true);
  TruncatedSeries out = TruncatedSeries::constant(1, n);
  // Euler-operator recurrence: d * E_kl = sum (i+j) t_ij E_{k-i,l-j}.
  for (int d = 1; d <= n; ++d)
    for (int l = 0; l <= d; ++l) {
      const int k = d - l;
      GaussianRational acc;
      for (const auto& t : ts) {
        if (t.k + t.l > d) break;
        if (t.k > k || t.l > l) continue;
        const auto& e = out.coeff(k - t.k, l - t.l);
        if (e.is_zero()) continue;
        acc.add_product(*t.c * GaussianRational(t.k + t.l), e);
      }
      if (!acc.is_zero()) out.set_coeff(k, l, acc / GaussianRational(d));
    }
  return s.real_flag() ? out.as_real() : out;
}

TruncatedSeries log1p(const TruncatedSeries& s) {
  if (!s.constant_term().is_zero()) throw domain_error("log1p requires a zero constant term");
  const int n = s.order();
  const auto ts = nonzero_terms(s, true);
  TruncatedSeries out(n);
  // (1 + t) * theta(L) = theta(t), theta the total-degree operator.
  for (int d = 1; d <= n; ++d)
    for (int l = 0; l <= d; ++l) {
      const int k = d - l;
      GaussianRational acc = s.coeff(k, l) * GaussianRational(d);
      for (const auto& t : ts) {
        if (t.k + t.l >= d) break;
        if (t.k > k || t.l > l) continue;
        const auto& lc = out.coeff(k - t.k, l - t.l);
        if (lc.is_zero()) continue;
        acc -= *t.c * lc * GaussianRational(d - t.k - t.l);
      }
      if (!acc.is_zero()) out.set_coeff(k, l, acc / GaussianRational(d));
    }
  return s.real_flag() ? out.as_real() : out;
}

TruncatedSeries reciprocal(const TruncatedSeries& s) {
  const GaussianRational c0 = s.constant_term();
  if (c0.is_zero()) throw domain_error("reciprocal of a series with zero constant term");
  const GaussianRational inv0 = GaussianRational(1) / c0;
  const int n = s.order();
  const auto ts = nonzero_terms(s, true);
  TruncatedSeries out = TruncatedSeries::constant(inv0, n);
  for (int d = 1; d <= n; ++d)
    for (int l = 0; l <= d; ++l) {
      const int k = d - l;
      GaussianRational acc;
      for (const auto& t : ts) {
        if (t.k + t.l > d) break;
        if (t.k > k || t.l > l) continue;
        const auto& q = out.coeff(k - t.k, l - t.l);
        if (!q.is_zero()) acc.add_product(*t.c, q);
      }
      if (!acc.is_zero()) out.set_coeff(k, l, -(acc * inv0));
    }
  return s.real_flag() ? out.as_real() : out;
}

TruncatedSeries sqrt(const TruncatedSeries& s) {
  const GaussianRational c0 = s.constant_term();
  if (!c0.is_real() || sgn(c0.real()) <= 0) throw domain_error("sqrt requires a positive rational constant term");
  const auto root = rational_sqrt(c0.real());
  if (!root) throw domain_error("constant term " + to_string(c0) + " is not the square of a rational");
  const int n = s.order();
  const GaussianRational two_root = GaussianRational(*root * 2);
  TruncatedSeries out = TruncatedSeries::constant(GaussianRational(*root), n);
  for (int d = 1; d <= n; ++d)
    for (int l = 0; l <= d; ++l) {
      const int k = d - l;
      GaussianRational acc = s.coeff(k, l);
      for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= l; ++j) {
          if (i + j == 0 || i + j == d) continue;
          const auto& a = out.coeff(i, j);
          const auto& b = out.coeff(k - i, l - j);
          if (!a.is_zero() && !b.is_zero()) acc -= a * b;
        }
      if (!acc.is_zero()) out.set_coeff(k, l, acc / two_root);
    }
  return s.real_flag() ? out.as_real() : out;
}

TruncatedSeries elementary(const TruncatedSeries& s, ElementaryFn fn) {
  switch (fn) {
    case ElementaryFn::exp: return exp(s);
    case ElementaryFn::log1p: return log1p(s);
    case ElementaryFn::reciprocal: return reciprocal(s);
    case ElementaryFn::sqrt: return sqrt(s);
  }
  return s;
}

TruncatedSeries pow(const TruncatedSeries& s, int n) {
  if (n < 0) return pow(reciprocal(s), -n);
  TruncatedSeries result = TruncatedSeries::constant(1, s.order());
  TruncatedSeries base = s;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return s.real_flag() ? result.as_real() : result;
}

std::complex<double> evaluate(const TruncatedSeries& s, std::complex<double> point) {
  const int n = s.order();
  std::vector<std::complex<double>> zp(n + 1), wp(n + 1);
  zp[0] = wp[0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    zp[i] = zp[i - 1] * point;
    wp[i] = wp[i - 1] * std::conj(point);
  }
  std::complex<double> sum = 0.0;
  for (int d = 0; d <= n; ++d)
    for (int l = 0; l <= d; ++l) {
      const auto& c = s.coeff(d - l, l);
      if (!c.is_zero()) sum += c.to_complex() * zp[d - l] * wp[l];
    }
  return sum;
}

}  // namespace crinv

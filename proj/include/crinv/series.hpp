#pragma once

#include <complex>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "crinv/gaussian_rational.hpp"

namespace crinv {

/// Differentiation variable: D = d/dz or Dbar = d/dzbar.
enum class Var { z, zbar };

/// Exponent pair (k, l) of z^k zbar^l.
using Exponent = std::pair<int, int>;

/// Bivariate power series in (z, zbar) over the Gaussian rationals, exact
/// through total degree `order()`.
///
/// Coefficients are stored densely in graded-lexicographic order: by total
/// degree, and within a degree by decreasing power of z. All binary
/// operators consume the smaller of the two orders. A derivative lowers the
/// order by one, so a result never carries coefficients that its inputs did
/// not determine.
///
/// `real_flag()` is a checked claim: it is only ever set on series whose
/// coefficients satisfy coeff(k, l) = conj(coeff(l, k)).
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0);

  static TruncatedSeries constant(const GaussianRational& c, int order);
  static TruncatedSeries monomial(int k, int l, const GaussianRational& c, int order);
  /// Throws domain_error if an exponent exceeds `order` or is negative.
  static TruncatedSeries from_terms(int order, const std::map<Exponent, GaussianRational>& terms);

  int order() const { return order_; }
  bool real_flag() const { return real_; }

  /// Zero for exponents beyond the order.
  const GaussianRational& coeff(int k, int l) const;
  GaussianRational constant_term() const { return coeff(0, 0); }
  void set_coeff(int k, int l, const GaussianRational& c);

  /// Nonzero coefficients only.
  std::map<Exponent, GaussianRational> terms() const;
  bool is_zero() const;
  /// First nonzero exponent in graded-lexicographic order.
  std::optional<Exponent> lowest_term() const;

  TruncatedSeries truncated(int order) const;
  bool has_real_symmetry() const;
  /// Returns a copy flagged real; throws domain_error if the symmetry fails.
  TruncatedSeries as_real() const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const GaussianRational& c);

  /// Order and coefficients; the reality flag is not compared.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

  static std::size_t index(int k, int l) {
    const auto d = static_cast<std::size_t>(k + l);
    return d * (d + 1) / 2 + static_cast<std::size_t>(l);
  }
  static std::size_t size_for(int order) { return index(0, order) + 1; }

 private:
  int order_;
  std::vector<GaussianRational> c_;
  bool real_ = false;

  friend TruncatedSeries conjugate(const TruncatedSeries& s);
  friend TruncatedSeries differentiate(const TruncatedSeries& s, Var v);
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(TruncatedSeries a, const GaussianRational& c);
TruncatedSeries operator*(const GaussianRational& c, TruncatedSeries a);
TruncatedSeries operator+(TruncatedSeries a, const GaussianRational& c);
TruncatedSeries operator-(TruncatedSeries a, const GaussianRational& c);

enum class ArithOp { add, sub, mul };

/// Strict form of the ring operations: both operands must have the same
/// order, else order_mismatch_error.
TruncatedSeries series_arith(const TruncatedSeries& lhs, const TruncatedSeries& rhs, ArithOp op);

/// Formal partial derivative; the result has order N - 1.
TruncatedSeries differentiate(const TruncatedSeries& s, Var v);
inline TruncatedSeries D(const TruncatedSeries& s) { return differentiate(s, Var::z); }
inline TruncatedSeries Dbar(const TruncatedSeries& s) { return differentiate(s, Var::zbar); }

/// coeff'(k, l) = conj(coeff(l, k)).
TruncatedSeries conjugate(const TruncatedSeries& s);

enum class ElementaryFn { exp, log1p, reciprocal, sqrt };

/// exp(s); the constant term of s must be zero (e^c is not rational).
TruncatedSeries exp(const TruncatedSeries& s);
/// log(1 + s); the constant term of s must be zero.
TruncatedSeries log1p(const TruncatedSeries& s);
TruncatedSeries reciprocal(const TruncatedSeries& s);
/// Square root with the positive branch at the center; the constant term must
/// be the square of a positive rational.
TruncatedSeries sqrt(const TruncatedSeries& s);
TruncatedSeries elementary(const TruncatedSeries& s, ElementaryFn fn);
/// Integer power; negative exponents go through reciprocal().
TruncatedSeries pow(const TruncatedSeries& s, int n);

/// Sum of coeff(k, l) z^k conj(z)^l in double precision, graded-lex order.
std::complex<double> evaluate(const TruncatedSeries& s, std::complex<double> point);

}  // namespace crinv

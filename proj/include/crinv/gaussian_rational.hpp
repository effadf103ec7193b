#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace crinv {

using Rational = mpq_class;

/// Parses "p" or "p/q" (optional sign on p). Throws domain_error on a zero
/// denominator and std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Exact rational square root, if one exists.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Complex number with exact rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |x|^2, always a non-negative rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  /// this += a * b without building a temporary GaussianRational.
  void add_product(const GaussianRational& a, const GaussianRational& b);

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
inline GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
inline GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
inline GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

/// "a", "bi", "a+bi" or "a-bi" with canonical rationals.
std::string to_string(const GaussianRational& x);
std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

}  // namespace crinv

#include "crinv/gaussian_rational.hpp"

#include <cctype>
#include <stdexcept>

#include "crinv/errors.hpp"

namespace crinv {

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_text(num, true)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    const std::string_view d = text.substr(slash + 1);
    if (!is_integer_text(d, false)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    den = parse_integer(d);
    if (den == 0) throw domain_error("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(parse_integer(num), den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = sqrt(q.get_num());
  mpz_class d = sqrt(q.get_den());
  if (n * n != q.get_num() || d * d != q.get_den()) return std::nullopt;
  return Rational(n, d);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw domain_error("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

void GaussianRational::add_product(const GaussianRational& a, const GaussianRational& b) {
  const bool ar = sgn(a.im_) == 0;
  const bool br = sgn(b.im_) == 0;
  if (ar && br) {
    re_ += a.re_ * b.re_;
  } else if (ar) {
    re_ += a.re_ * b.re_;
    im_ += a.re_ * b.im_;
  } else if (br) {
    re_ += a.re_ * b.re_;
    im_ += a.im_ * b.re_;
  } else {
    re_ += a.re_ * b.re_ - a.im_ * b.im_;
    im_ += a.re_ * b.im_ + a.im_ * b.re_;
  }
}

std::string to_string(const GaussianRational& x) {
  if (x.is_real()) return to_string(x.real());
  std::string im;
  if (x.imag() == 1)
    im = "i";
  else if (x.imag() == -1)
    im = "-i";
  else
    im = to_string(x.imag()) + "i";
  if (sgn(x.real()) == 0) return im;
  return to_string(x.real()) + (im[0] == '-' ? "" : "+") + im;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << to_string(x); }

}  // namespace crinv

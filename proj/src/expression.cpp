#include "crinv/expression.hpp"

#include <cctype>

#include "crinv/errors.hpp"

namespace crinv {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int order, ExpressionVars vars) : text_(text), order_(order), vars_(vars) {}

  TruncatedSeries parse() {
    TruncatedSeries s = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  TruncatedSeries expr() {
    TruncatedSeries acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  TruncatedSeries term() {
    TruncatedSeries acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const TruncatedSeries divisor = unary();
        if (divisor.constant_term().is_zero()) throw parse_error("divisor has zero constant term", at);
        acc = acc * reciprocal(divisor);
      } else {
        return acc;
      }
    }
  }

  TruncatedSeries unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  long exponent() {
    skip_space();
    const bool paren = accept('(');
    skip_space();
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (paren) expect(')');
    return negative ? -e : e;
  }

  TruncatedSeries power() {
    TruncatedSeries base = primary();
    if (accept('^')) {
      const std::size_t at = pos_;
      const long e = exponent();
      if (e < 0 && base.constant_term().is_zero()) throw parse_error("negative power of a series with zero constant term", at);
      base = pow(base, static_cast<int>(e));
    }
    return base;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  TruncatedSeries primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const mpz_class n(std::string(text_.substr(start, pos_ - start)), 10);
      return TruncatedSeries::constant(GaussianRational(Rational(n)), order_);
    }
    if (accept('(')) {
      TruncatedSeries inner = expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      const std::string name = identifier();
      const bool bivariate = vars_ == ExpressionVars::bivariate;
      if (name == "z" && bivariate) return TruncatedSeries::monomial(1, 0, 1, order_);
      if (name == "zb" && bivariate) return TruncatedSeries::monomial(0, 1, 1, order_);
      if (name == "u" && !bivariate) return TruncatedSeries::monomial(1, 0, 1, order_);
      if (name == "i") return TruncatedSeries::constant(GaussianRational::i(), order_);
      if (name == "exp" || name == "log") {
        expect('(');
        const TruncatedSeries arg = expr();
        expect(')');
        if (name == "exp") {
          if (!arg.constant_term().is_zero()) throw parse_error("exp needs an argument with zero constant term", at);
          return exp(arg);
        }
        if (arg.constant_term() != GaussianRational(1))
          throw parse_error("log needs an argument with constant term 1", at);
        return log1p(arg - GaussianRational(1));
      }
      pos_ = at;
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int order_;
  ExpressionVars vars_;
  std::size_t pos_ = 0;
};

std::string monomial_text(int k, int l) {
  std::string out;
  auto factor = [&](const char* name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  };
  factor("z", k);
  factor("zb", l);
  return out;
}

std::string coefficient_text(const GaussianRational& c) {
  if (c.is_real()) return to_string(c.real());
  if (sgn(c.real()) == 0) {
    if (c.imag() == 1) return "i";
    return "(" + to_string(c.imag()) + "*i)";
  }
  const std::string im = c.imag() == 1 ? "i" : c.imag() == -1 ? "-i" : to_string(c.imag()) + "*i";
  return "(" + to_string(c.real()) + (im[0] == '-' ? "" : "+") + im + ")";
}

}  // namespace

TruncatedSeries parse_expression(std::string_view text, int order, ExpressionVars vars) {
  if (order < 0) throw domain_error("negative truncation order");
  return Parser(text, order, vars).parse();
}

std::string print_expression(const TruncatedSeries& s) {
  std::string out;
  for (int d = 0; d <= s.order(); ++d)
    for (int l = 0; l <= d; ++l) {
    const int k = d - l;
    const GaussianRational& c = s.coeff(k, l);
    if (c.is_zero()) continue;
    const std::string mono = monomial_text(k, l);
    GaussianRational coeff = c;
    if (!out.empty()) {
      if (coeff.is_real() && sgn(coeff.real()) < 0) {
        out += " - ";
        coeff = -coeff;
      } else {
        out += " + ";
      }
    }
    if (mono.empty())
      out += coefficient_text(coeff);
    else if (coeff == GaussianRational(1))
      out += mono;
    else if (coeff == GaussianRational(-1))
      out += "-" + mono;
    else
      out += coefficient_text(coeff) + "*" + mono;
    }
  return out.empty() ? "0" : out;
}

}  // namespace crinv

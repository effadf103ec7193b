#include "crinv/polynomial.hpp"

#include <stdexcept>

namespace crinv {

BracketPolynomial::BracketPolynomial(const GaussianRational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

BracketPolynomial BracketPolynomial::var(BracketVar v) {
  BracketPolynomial p;
  Monomial m{};
  m[static_cast<std::size_t>(v)] = 1;
  p.terms_.emplace(m, GaussianRational(1));
  return p;
}

void BracketPolynomial::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BracketPolynomial BracketPolynomial::conj() const {
  BracketPolynomial out;
  for (const auto& [m, c] : terms_) {
    if (m[4] != 0 || m[5] != 0) throw std::logic_error("conjugation is only defined on polynomials in b, bbar, mu, mubar");
    Monomial swapped = m;
    std::swap(swapped[0], swapped[1]);
    std::swap(swapped[2], swapped[3]);
    out.add_term(swapped, c.conj());
  }
  return out;
}

GaussianRational BracketPolynomial::evaluate(const std::array<GaussianRational, kBracketVars>& at) const {
  GaussianRational sum;
  for (const auto& [m, c] : terms_) {
    GaussianRational term = c;
    for (std::size_t v = 0; v < kBracketVars; ++v)
      for (int e = 0; e < m[v]; ++e) term *= at[v];
    sum += term;
  }
  return sum;
}

BracketPolynomial BracketPolynomial::operator-() const {
  BracketPolynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

BracketPolynomial& BracketPolynomial::operator+=(const BracketPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BracketPolynomial& BracketPolynomial::operator-=(const BracketPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BracketPolynomial operator*(const BracketPolynomial& a, const BracketPolynomial& b) {
  BracketPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      BracketPolynomial::Monomial m;
      for (std::size_t v = 0; v < kBracketVars; ++v) m[v] = ma[v] + mb[v];
      out.add_term(m, ca * cb);
    }
  return out;
}

std::string to_string(const BracketPolynomial& p) {
  static const char* names[kBracketVars] = {"b", "bbar", "mu", "mubar", "L1r", "r"};
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")";
    for (std::size_t v = 0; v < kBracketVars; ++v)
      if (m[v] > 0) out += std::string("*") + names[v] + (m[v] > 1 ? "^" + std::to_string(m[v]) : "");
  }
  return out;
}

}  // namespace crinv

#pragma once

#include <array>
#include <map>
#include <string>

#include "crinv/gaussian_rational.hpp"

namespace crinv {

/// Indeterminates of the fiber-coordinate bracket computation. `L1r` stands
/// for the function L_1 r.
enum class BracketVar { b, bbar, mu, mubar, L1r, r };

inline constexpr std::size_t kBracketVars = 6;

/// Sparse polynomial over the Gaussian rationals in the six indeterminates
/// of BracketVar. Zero terms are never stored.
class BracketPolynomial {
 public:
  using Monomial = std::array<int, kBracketVars>;

  BracketPolynomial() = default;
  BracketPolynomial(const GaussianRational& c);
  static BracketPolynomial var(BracketVar v);

  const std::map<Monomial, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Complex conjugation: conjugates coefficients and swaps b <-> bbar,
  /// mu <-> mubar. Defined only on polynomials free of L1r and r.
  BracketPolynomial conj() const;

  GaussianRational evaluate(const std::array<GaussianRational, kBracketVars>& at) const;

  BracketPolynomial operator-() const;
  BracketPolynomial& operator+=(const BracketPolynomial& o);
  BracketPolynomial& operator-=(const BracketPolynomial& o);
  friend BracketPolynomial operator*(const BracketPolynomial& a, const BracketPolynomial& b);
  friend bool operator==(const BracketPolynomial& a, const BracketPolynomial& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const GaussianRational& c);
  std::map<Monomial, GaussianRational> terms_;
};

inline BracketPolynomial operator+(BracketPolynomial a, const BracketPolynomial& b) { return a += b; }
inline BracketPolynomial operator-(BracketPolynomial a, const BracketPolynomial& b) { return a -= b; }

std::string to_string(const BracketPolynomial& p);

}  // namespace crinv

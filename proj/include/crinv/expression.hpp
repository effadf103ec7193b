#pragma once

#include <string>
#include <string_view>

#include "crinv/series.hpp"

namespace crinv {

/// Which atoms an expression may use. `profile` expressions are polynomials
/// in the single variable `u`, returned with u in the z slot.
enum class ExpressionVars { bivariate, profile };

/// Expands an expression exactly to total degree `order`.
///
/// Grammar (whitespace-insensitive):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' int)?        int may be signed or parenthesized
///   primary := integer | 'z' | 'zb' | 'u' | 'i' | ('exp' | 'log') '(' expr ')' | '(' expr ')'
///
/// Rational literals are written p/q. `log` needs a constant term of 1,
/// `exp` a constant term of 0, and `/` and negative powers a nonzero
/// constant term in the divisor. Throws parse_error (with a position) or
/// domain_error.
TruncatedSeries parse_expression(std::string_view text, int order, ExpressionVars vars = ExpressionVars::bivariate);

/// Canonical text for a series: terms in graded-lex order, e.g.
/// "1 - 2*z*zb + (1/2+i)*z^2". parse_expression(print_expression(s), s.order()) == s.
std::string print_expression(const TruncatedSeries& s);

}  // namespace crinv

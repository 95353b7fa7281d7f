#pragma once

#include <bzeta/bailey/algebra.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bzeta::bailey {

/// Syntax or evaluation error with a 1-based column inside the expression text.
class ExpressionError : public std::runtime_error {
 public:
  ExpressionError(const std::string& message, std::size_t column)
      : std::runtime_error(message), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Expression tree for pair definitions.
///
/// Grammar (lowest to highest precedence):
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' exponent)?      exponent := '-' exponent | power
///   atom   := integer | identifier | call | '(' expr ')'
///   call   := sum(var, lo, hi, body) | prod(var, lo, hi, body)
///           | poch(x, base, count) | qint(r) | delta(k) | binom(m, k)
/// `q` is the formal variable, `s` the deformation parameter, `n` the index.
struct Expr {
  enum class Kind { number, variable, negate, add, subtract, multiply, divide, power, call };

  Kind kind = Kind::number;
  qcore::BigInt number;
  std::string name;
  std::vector<std::shared_ptr<const Expr>> args;
  std::size_t column = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expression(std::string_view text);

/// Canonical text; parse_expression(to_string(e)) is structurally equal to e.
std::string to_string(const Expr& e);

/// Structural equality, ignoring source columns.
bool equivalent(const Expr& a, const Expr& b);

/// Evaluates a monomial expression c*q^k (no free indices) for a_param and rho values.
Monomial evaluate_monomial(const Expr& e, const std::optional<Rational>& s = std::nullopt);

/// Bindings for integer indices (n, and the variables of sum/prod).
struct Environment {
  std::map<std::string, std::int64_t, std::less<>> indices;
  std::optional<Rational> s;
};

/// Evaluates an expression in the given algebra. Scalars stay exact
/// rationals until they meet an algebra element.
template <typename Algebra>
typename Algebra::Element evaluate(const Expr& e, const Algebra& alg, const Environment& env);

extern template SeriesAlgebra::Element evaluate<SeriesAlgebra>(const Expr&, const SeriesAlgebra&,
                                                               const Environment&);
extern template RationalAlgebra::Element evaluate<RationalAlgebra>(const Expr&,
                                                                   const RationalAlgebra&,
                                                                   const Environment&);

}  // namespace bzeta::bailey

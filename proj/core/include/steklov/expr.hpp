#pragma once

#include <complex>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace steklov {

/// Point at which an expression is evaluated. x and y are the Cartesian
/// coordinates of (r, theta).
struct EvalPoint {
  double r = 0.0;
  double theta = 0.0;
  double x = 0.0;
  double y = 0.0;
  static EvalPoint polar(double r, double theta);
};

struct ExprNode;

/// Immutable expression tree over complex literals, the imaginary unit,
/// the variables r/theta/x/y and the operators + - * / ^ plus the
/// functions sin cos exp sqrt abs. Nodes are shared, so copies are cheap.
class Expr {
 public:
  Expr() = default;
  explicit Expr(ExprNode node);
  static Expr constant(std::complex<double> value);

  bool valid() const { return node_ != nullptr; }
  const ExprNode& node() const { return *node_; }

  /// Throws EvaluationError on division by a value with modulus < 1e-14.
  std::complex<double> eval(const EvalPoint& at) const;

  /// True when the tree contains no variables.
  bool is_constant() const;

  /// Canonical, fully parenthesized text that re-parses to an identical tree.
  std::string to_string() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  std::shared_ptr<const ExprNode> node_;
};

enum class ExprVariable { r, theta, x, y };
enum class ExprFunction { sin, cos, exp, sqrt, abs };
enum class ExprBinaryOp { add, sub, mul, div };

struct ExprLiteral {
  std::complex<double> value;
};
struct ExprVar {
  ExprVariable which;
};
struct ExprNegate {
  Expr operand;
};
struct ExprBinary {
  ExprBinaryOp op;
  Expr lhs;
  Expr rhs;
};
/// base ^ (numerator / denominator); denominator == 1 for integer powers.
struct ExprPower {
  Expr base;
  long numerator;
  long denominator;
};
struct ExprCall {
  ExprFunction fn;
  Expr arg;
};

struct ExprNode {
  std::variant<ExprLiteral, ExprVar, ExprNegate, ExprBinary, ExprPower, ExprCall> value;
};

struct ParseOptions {
  /// Accept exponents of the form ^(p/q) and ^(-p/q). Used for inclusion
  /// boundary curves such as (|sin t|^5 + |cos t|^5)^(-1/5).
  bool allow_rational_powers = false;
};

/// Recursive-descent parser:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-'? atom ('^' exponent)?
///   atom   := number | 'i' | var | func '(' expr ')' | '(' expr ')'
/// where exponent is an unsigned integer, or (p/q) with an optional sign
/// when rational powers are enabled. Whitespace is insignificant. Errors
/// carry the 1-based byte offset of the first invalid token.
Expr parse_expression(std::string_view text, const ParseOptions& options = {});

}  // namespace steklov

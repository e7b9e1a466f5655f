#include "steklov/expr.hpp"

#include <fmt/format.h>

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <utility>

#include "steklov/error.hpp"

namespace steklov {

EvalPoint EvalPoint::polar(double r, double theta) {
  return EvalPoint{r, theta, r * std::cos(theta), r * std::sin(theta)};
}

Expr::Expr(ExprNode node) : node_(std::make_shared<const ExprNode>(std::move(node))) {}

Expr Expr::constant(std::complex<double> value) { return Expr(ExprNode{ExprLiteral{value}}); }

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kDivisionFloor = 1e-14;

std::complex<double> integer_power(std::complex<double> base, long exponent) {
  std::complex<double> result = 1.0;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

std::string_view variable_name(ExprVariable v) {
  switch (v) {
    case ExprVariable::r:
      return "r";
    case ExprVariable::theta:
      return "theta";
    case ExprVariable::x:
      return "x";
    case ExprVariable::y:
      return "y";
  }
  return "r";
}

std::string_view function_name(ExprFunction f) {
  switch (f) {
    case ExprFunction::sin:
      return "sin";
    case ExprFunction::cos:
      return "cos";
    case ExprFunction::exp:
      return "exp";
    case ExprFunction::sqrt:
      return "sqrt";
    case ExprFunction::abs:
      return "abs";
  }
  return "sin";
}

char operator_symbol(ExprBinaryOp op) {
  switch (op) {
    case ExprBinaryOp::add:
      return '+';
    case ExprBinaryOp::sub:
      return '-';
    case ExprBinaryOp::mul:
      return '*';
    case ExprBinaryOp::div:
      return '/';
  }
  return '+';
}

std::string literal_text(std::complex<double> v) {
  if (v.imag() == 0.0 && v.real() >= 0.0) return fmt::format("{}", v.real());
  if (v.real() == 0.0 && v.imag() == 1.0) return "i";
  std::string out = "(";
  out += v.real() < 0 ? fmt::format("(-{})", -v.real()) : fmt::format("{}", v.real());
  out += v.imag() < 0 ? fmt::format("-{}*i", -v.imag()) : fmt::format("+{}*i", v.imag());
  out += ")";
  return out;
}

}  // namespace

std::complex<double> Expr::eval(const EvalPoint& at) const {
  return std::visit(
      Overloaded{
          [](const ExprLiteral& lit) { return lit.value; },
          [&](const ExprVar& var) -> std::complex<double> {
            switch (var.which) {
              case ExprVariable::r:
                return at.r;
              case ExprVariable::theta:
                return at.theta;
              case ExprVariable::x:
                return at.x;
              case ExprVariable::y:
                return at.y;
            }
            return 0.0;
          },
          [&](const ExprNegate& neg) { return -neg.operand.eval(at); },
          [&](const ExprBinary& bin) -> std::complex<double> {
            const auto lhs = bin.lhs.eval(at);
            const auto rhs = bin.rhs.eval(at);
            switch (bin.op) {
              case ExprBinaryOp::add:
                return lhs + rhs;
              case ExprBinaryOp::sub:
                return lhs - rhs;
              case ExprBinaryOp::mul:
                return lhs * rhs;
              case ExprBinaryOp::div:
                if (std::abs(rhs) < kDivisionFloor) {
                  throw EvaluationError(
                      fmt::format("division by ~0 at (r={}, theta={})", at.r, at.theta));
                }
                return lhs / rhs;
            }
            return 0.0;
          },
          [&](const ExprPower& pw) -> std::complex<double> {
            const auto base = pw.base.eval(at);
            if (pw.denominator == 1) return integer_power(base, pw.numerator);
            if (pw.numerator < 0 && std::abs(base) < kDivisionFloor) {
              throw EvaluationError(
                  fmt::format("negative power of ~0 at (r={}, theta={})", at.r, at.theta));
            }
            if (base.imag() == 0.0 && base.real() >= 0.0) {
              return std::pow(base.real(), static_cast<double>(pw.numerator) / pw.denominator);
            }
            return std::pow(base, static_cast<double>(pw.numerator) / pw.denominator);
          },
          [&](const ExprCall& call) -> std::complex<double> {
            const auto arg = call.arg.eval(at);
            switch (call.fn) {
              case ExprFunction::sin:
                return arg.imag() == 0.0 ? std::sin(arg.real()) : std::sin(arg);
              case ExprFunction::cos:
                return arg.imag() == 0.0 ? std::cos(arg.real()) : std::cos(arg);
              case ExprFunction::exp:
                return arg.imag() == 0.0 ? std::exp(arg.real()) : std::exp(arg);
              case ExprFunction::sqrt:
                return std::sqrt(arg);
              case ExprFunction::abs:
                return std::abs(arg);
            }
            return 0.0;
          },
      },
      node_->value);
}

bool Expr::is_constant() const {
  return std::visit(Overloaded{
                        [](const ExprLiteral&) { return true; },
                        [](const ExprVar&) { return false; },
                        [](const ExprNegate& n) { return n.operand.is_constant(); },
                        [](const ExprBinary& b) { return b.lhs.is_constant() && b.rhs.is_constant(); },
                        [](const ExprPower& p) { return p.base.is_constant(); },
                        [](const ExprCall& c) { return c.arg.is_constant(); },
                    },
                    node_->value);
}

std::string Expr::to_string() const {
  return std::visit(
      Overloaded{
          [](const ExprLiteral& lit) { return literal_text(lit.value); },
          [](const ExprVar& var) { return std::string(variable_name(var.which)); },
          [](const ExprNegate& neg) { return "(-" + neg.operand.to_string() + ")"; },
          [](const ExprBinary& bin) {
            return "(" + bin.lhs.to_string() + operator_symbol(bin.op) + bin.rhs.to_string() + ")";
          },
          [](const ExprPower& pw) {
            if (pw.denominator == 1) return fmt::format("({}^{})", pw.base.to_string(), pw.numerator);
            return fmt::format("({}^({}/{}))", pw.base.to_string(), pw.numerator, pw.denominator);
          },
          [](const ExprCall& call) {
            return std::string(function_name(call.fn)) + "(" + call.arg.to_string() + ")";
          },
      },
      node_->value);
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (!a.valid() || !b.valid()) return false;
  const auto& va = a.node_->value;
  const auto& vb = b.node_->value;
  if (va.index() != vb.index()) return false;
  return std::visit(
      Overloaded{
          [&](const ExprLiteral& x) { return x.value == std::get<ExprLiteral>(vb).value; },
          [&](const ExprVar& x) { return x.which == std::get<ExprVar>(vb).which; },
          [&](const ExprNegate& x) { return x.operand == std::get<ExprNegate>(vb).operand; },
          [&](const ExprBinary& x) {
            const auto& y = std::get<ExprBinary>(vb);
            return x.op == y.op && x.lhs == y.lhs && x.rhs == y.rhs;
          },
          [&](const ExprPower& x) {
            const auto& y = std::get<ExprPower>(vb);
            return x.numerator == y.numerator && x.denominator == y.denominator && x.base == y.base;
          },
          [&](const ExprCall& x) {
            const auto& y = std::get<ExprCall>(vb);
            return x.fn == y.fn && x.arg == y.arg;
          },
      },
      va);
}

namespace {

constexpr std::size_t kMaxExpressionLength = 4096;

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

  Expr parse() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_ + 1);
    Expr e = parse_expr();
    skip_space();
    if (!at_end()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view text_;
  ParseOptions options_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(at_end() ? std::string("expected '") + c + "' before end of input"
                    : std::string("expected '") + c + "'");
    }
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      Expr rhs = parse_term();
      lhs = Expr(ExprNode{ExprBinary{c == '+' ? ExprBinaryOp::add : ExprBinaryOp::sub, lhs, rhs}});
    }
  }

  Expr parse_term() {
    Expr lhs = parse_factor();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '*' && c != '/') return lhs;
      ++pos_;
      Expr rhs = parse_factor();
      lhs = Expr(ExprNode{ExprBinary{c == '*' ? ExprBinaryOp::mul : ExprBinaryOp::div, lhs, rhs}});
    }
  }

  Expr parse_factor() {
    const bool negate = accept('-');
    Expr base = parse_atom();
    if (accept('^')) base = parse_exponent(base);
    if (negate) return Expr(ExprNode{ExprNegate{base}});
    return base;
  }

  long parse_unsigned() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) {
      pos_ = start;
      fail("expected integer exponent");
    }
    long value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{} || value > 64) {
      pos_ = start;
      fail("exponent out of range");
    }
    return value;
  }

  Expr parse_exponent(const Expr& base) {
    skip_space();
    if (peek() == '(') {
      if (!options_.allow_rational_powers) fail("rational exponents are only allowed in boundary curves");
      ++pos_;
      const bool negative = accept('-');
      const long numerator = parse_unsigned();
      expect('/');
      const long denominator = parse_unsigned();
      if (denominator == 0) fail("zero exponent denominator");
      expect(')');
      return Expr(ExprNode{ExprPower{base, negative ? -numerator : numerator, denominator}});
    }
    return Expr(ExprNode{ExprPower{base, parse_unsigned(), 1}});
  }

  Expr parse_atom() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
    fail(std::string("unexpected '") + c + "'");
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    const auto digits = [&] {
      std::size_t n = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (peek() == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      pos_ = start;
      fail("malformed number");
    }
    if (peek() == 'e' || peek() == 'E') {
      const std::size_t mark = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (digits() == 0) {
        pos_ = mark;
        fail("malformed exponent");
      }
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{} || ptr != text_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    return Expr::constant(value);
  }

  Expr parse_identifier() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "i") return Expr::constant({0.0, 1.0});
    if (name == "r") return Expr(ExprNode{ExprVar{ExprVariable::r}});
    if (name == "theta") return Expr(ExprNode{ExprVar{ExprVariable::theta}});
    if (name == "x") return Expr(ExprNode{ExprVar{ExprVariable::x}});
    if (name == "y") return Expr(ExprNode{ExprVar{ExprVariable::y}});
    ExprFunction fn;
    if (name == "sin") {
      fn = ExprFunction::sin;
    } else if (name == "cos") {
      fn = ExprFunction::cos;
    } else if (name == "exp") {
      fn = ExprFunction::exp;
    } else if (name == "sqrt") {
      fn = ExprFunction::sqrt;
    } else if (name == "abs") {
      fn = ExprFunction::abs;
    } else {
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    expect('(');
    Expr arg = parse_expr();
    expect(')');
    return Expr(ExprNode{ExprCall{fn, arg}});
  }
};

}  // namespace

Expr parse_expression(std::string_view text, const ParseOptions& options) {
  if (text.size() > kMaxExpressionLength) {
    throw ParseError("expression longer than 4096 bytes", kMaxExpressionLength + 1);
  }
  return Parser(text, options).parse();
}

}  // namespace steklov

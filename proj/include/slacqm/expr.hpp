#pragma once

// Small arithmetic language for user-defined potentials and mass functions.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?          (right-associative)
//   primary := number | variable | function '(' expr ')' | '(' expr ')'
//
// Functions: sin cos exp sqrt abs tanh.  `^` binds tighter than unary minus,
// so -x^2 == -(x^2) and 2^3^2 == 2^9.

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace slacqm {

class Expression {
 public:
  enum class Kind : unsigned char { Number, Variable, Negate, Add, Sub, Mul, Div, Pow, Call };
  enum class Function : unsigned char { Sin, Cos, Exp, Sqrt, Abs, Tanh };

  struct Node {
    Kind kind{};
    Function fn{};
    double value = 0.0;  // Number
    int slot = -1;       // Variable: index into variables()
    int lhs = -1;        // operand of Negate/Call, left of binary ops
    int rhs = -1;
  };

  /// Parses `source`; identifiers must be drawn from `allowed_vars`.
  /// Throws ParseError carrying the byte offset of the problem.
  static Expression parse(std::string_view source, std::vector<std::string> allowed_vars);

  /// Positional evaluation: `args[i]` binds `variables()[i]`.
  /// Throws EvalError if `args` is too short for the referenced variables.
  double operator()(std::span<const double> args) const;
  double operator()(double x) const { return (*this)(std::span<const double>(&x, 1)); }
  double operator()(double x, double y) const {
    const double xy[2] = {x, y};
    return (*this)(std::span<const double>(xy, 2));
  }

  /// Named evaluation. Throws EvalError when a referenced variable is unbound.
  double eval(const std::map<std::string, double, std::less<>>& point) const;

  /// Canonical fully-parenthesised text; parses back to a structurally equal tree.
  std::string to_string() const;

  const std::string& source() const noexcept { return data_->source; }
  const std::vector<std::string>& variables() const noexcept { return data_->vars; }
  std::vector<std::string> referenced_variables() const;
  const std::vector<Node>& nodes() const noexcept { return data_->nodes; }
  int root() const noexcept { return data_->root; }

  /// Structural (AST) equality, independent of source spelling.
  friend bool operator==(const Expression& a, const Expression& b);

 private:
  struct Data {
    std::string source;
    std::vector<std::string> vars;
    std::vector<Node> nodes;
    int root = -1;
    int needed_args = 0;  // 1 + highest referenced slot
  };
  explicit Expression(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  double eval_node(int id, std::span<const double> args) const;
  void print_node(int id, std::string& out) const;

  std::shared_ptr<const Data> data_;
};

std::string_view function_name(Expression::Function fn);

}  // namespace slacqm

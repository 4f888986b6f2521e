#include "slacqm/expr.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <set>

#include "slacqm/error.hpp"

namespace slacqm {

namespace {

constexpr int kMaxDepth = 200;

constexpr std::array<std::pair<std::string_view, Expression::Function>, 6> kFunctions{{
    {"sin", Expression::Function::Sin},
    {"cos", Expression::Function::Cos},
    {"exp", Expression::Function::Exp},
    {"sqrt", Expression::Function::Sqrt},
    {"abs", Expression::Function::Abs},
    {"tanh", Expression::Function::Tanh},
}};

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& vars, std::vector<Expression::Node>& nodes)
      : src_(src), vars_(vars), nodes_(nodes) {}

  int parse_all() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("empty expression", pos_);
    const int root = parse_expr(0);
    skip_ws();
    if (pos_ < src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return root;
  }

  int highest_slot() const { return highest_slot_; }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                                  src_[pos_] == '\r'))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= src_.size()) throw ParseError(std::string("expected '") + c + "' before end of input", pos_);
      throw ParseError(std::string("expected '") + c + "' but found '" + src_[pos_] + "'", pos_);
    }
  }

  int add(Expression::Node n) {
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
  }

  int binary(Expression::Kind k, int l, int r) {
    Expression::Node n;
    n.kind = k;
    n.lhs = l;
    n.rhs = r;
    return add(n);
  }

  void enter(int depth) const {
    if (depth > kMaxDepth) throw ParseError("expression nested too deeply", pos_);
  }

  int parse_expr(int depth) {
    enter(depth);
    int lhs = parse_term(depth + 1);
    for (;;) {
      if (accept('+'))
        lhs = binary(Expression::Kind::Add, lhs, parse_term(depth + 1));
      else if (accept('-'))
        lhs = binary(Expression::Kind::Sub, lhs, parse_term(depth + 1));
      else
        return lhs;
    }
  }

  int parse_term(int depth) {
    enter(depth);
    int lhs = parse_unary(depth + 1);
    for (;;) {
      if (accept('*'))
        lhs = binary(Expression::Kind::Mul, lhs, parse_unary(depth + 1));
      else if (accept('/'))
        lhs = binary(Expression::Kind::Div, lhs, parse_unary(depth + 1));
      else
        return lhs;
    }
  }

  int parse_unary(int depth) {
    enter(depth);
    if (accept('-')) {
      Expression::Node n;
      n.kind = Expression::Kind::Negate;
      n.lhs = parse_unary(depth + 1);
      return add(n);
    }
    if (accept('+')) return parse_unary(depth + 1);
    return parse_power(depth + 1);
  }

  int parse_power(int depth) {
    enter(depth);
    const int base = parse_primary(depth + 1);
    if (accept('^')) return binary(Expression::Kind::Pow, base, parse_unary(depth + 1));
    return base;
  }

  int parse_primary(int depth) {
    enter(depth);
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      const int inner = parse_expr(depth + 1);
      expect(')');
      return inner;
    }
    if (is_digit(c) || c == '.') return parse_number();
    if (is_ident_start(c)) return parse_identifier(depth);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  int parse_number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < src_.size() && is_digit(src_[p])) {
        while (p < src_.size() && is_digit(src_[p])) ++p;
        pos_ = p;
      }
    }
    const std::string_view text = src_.substr(start, pos_ - start);
    if (text == ".") throw ParseError("malformed number", start);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec == std::errc::result_out_of_range) throw ParseError("number out of range", start);
    if (ec != std::errc() || ptr != text.data() + text.size()) throw ParseError("malformed number", start);
    if (!std::isfinite(v)) throw ParseError("number out of range", start);
    Expression::Node n;
    n.kind = Expression::Kind::Number;
    n.value = v;
    return add(n);
  }

  int parse_identifier(int depth) {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);

    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '(') {
      const auto it = std::find_if(kFunctions.begin(), kFunctions.end(),
                                   [&](const auto& f) { return f.first == name; });
      if (it == kFunctions.end()) throw ParseError("unknown function '" + std::string(name) + "'", start);
      ++pos_;
      int argc = 0;
      int arg = -1;
      skip_ws();
      if (!accept(')')) {
        do {
          const int a = parse_expr(depth + 1);
          if (argc == 0) arg = a;
          ++argc;
        } while (accept(','));
        expect(')');
      }
      if (argc != 1)
        throw ParseError("function '" + std::string(name) + "' takes 1 argument, got " + std::to_string(argc),
                         start);
      Expression::Node n;
      n.kind = Expression::Kind::Call;
      n.fn = it->second;
      n.lhs = arg;
      return add(n);
    }

    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) {
        Expression::Node n;
        n.kind = Expression::Kind::Variable;
        n.slot = static_cast<int>(i);
        highest_slot_ = std::max(highest_slot_, n.slot);
        return add(n);
      }
    }
    throw ParseError("unknown identifier '" + std::string(name) + "'", start);
  }

  std::string_view src_;
  const std::vector<std::string>& vars_;
  std::vector<Expression::Node>& nodes_;
  std::size_t pos_ = 0;
  int highest_slot_ = -1;
};

bool nodes_equal(const Expression& a, int ia, const Expression& b, int ib) {
  const auto& na = a.nodes()[static_cast<std::size_t>(ia)];
  const auto& nb = b.nodes()[static_cast<std::size_t>(ib)];
  if (na.kind != nb.kind) return false;
  using K = Expression::Kind;
  switch (na.kind) {
    case K::Number:
      return na.value == nb.value;
    case K::Variable:
      return a.variables()[static_cast<std::size_t>(na.slot)] == b.variables()[static_cast<std::size_t>(nb.slot)];
    case K::Negate:
      return nodes_equal(a, na.lhs, b, nb.lhs);
    case K::Call:
      return na.fn == nb.fn && nodes_equal(a, na.lhs, b, nb.lhs);
    default:
      return nodes_equal(a, na.lhs, b, nb.lhs) && nodes_equal(a, na.rhs, b, nb.rhs);
  }
}

}  // namespace

std::string_view function_name(Expression::Function fn) {
  for (const auto& [name, f] : kFunctions)
    if (f == fn) return name;
  return "?";
}

Expression Expression::parse(std::string_view source, std::vector<std::string> allowed_vars) {
  auto d = std::make_shared<Data>();
  d->source = std::string(source);
  d->vars = std::move(allowed_vars);
  Parser p(d->source, d->vars, d->nodes);
  d->root = p.parse_all();
  d->needed_args = p.highest_slot() + 1;
  return Expression(std::move(d));
}

double Expression::eval_node(int id, std::span<const double> args) const {
  const Node& n = data_->nodes[static_cast<std::size_t>(id)];
  switch (n.kind) {
    case Kind::Number:
      return n.value;
    case Kind::Variable:
      return args[static_cast<std::size_t>(n.slot)];
    case Kind::Negate:
      return -eval_node(n.lhs, args);
    case Kind::Add:
      return eval_node(n.lhs, args) + eval_node(n.rhs, args);
    case Kind::Sub:
      return eval_node(n.lhs, args) - eval_node(n.rhs, args);
    case Kind::Mul:
      return eval_node(n.lhs, args) * eval_node(n.rhs, args);
    case Kind::Div:
      return eval_node(n.lhs, args) / eval_node(n.rhs, args);
    case Kind::Pow: {
      const double base = eval_node(n.lhs, args);
      const double expo = eval_node(n.rhs, args);
      if (base < 0.0 && std::isfinite(expo) && expo != std::trunc(expo))
        throw EvalError("non-integer power " + std::to_string(expo) + " of negative base " +
                        std::to_string(base) + " in '" + data_->source + "'");
      return std::pow(base, expo);
    }
    case Kind::Call: {
      const double v = eval_node(n.lhs, args);
      switch (n.fn) {
        case Function::Sin: return std::sin(v);
        case Function::Cos: return std::cos(v);
        case Function::Exp: return std::exp(v);
        case Function::Sqrt: return std::sqrt(v);
        case Function::Abs: return std::abs(v);
        case Function::Tanh: return std::tanh(v);
      }
    }
  }
  return 0.0;
}

double Expression::operator()(std::span<const double> args) const {
  if (static_cast<int>(args.size()) < data_->needed_args)
    throw EvalError("expression '" + data_->source + "' needs " + std::to_string(data_->needed_args) +
                    " argument(s), got " + std::to_string(args.size()));
  return eval_node(data_->root, args);
}

double Expression::eval(const std::map<std::string, double, std::less<>>& point) const {
  std::vector<double> args(data_->vars.size(), 0.0);
  for (const auto& name : referenced_variables()) {
    const auto it = point.find(name);
    if (it == point.end()) throw EvalError("no value bound for variable '" + name + "'");
    const auto slot = std::find(data_->vars.begin(), data_->vars.end(), name) - data_->vars.begin();
    args[static_cast<std::size_t>(slot)] = it->second;
  }
  return eval_node(data_->root, args);
}

std::vector<std::string> Expression::referenced_variables() const {
  std::set<int> slots;
  for (const Node& n : data_->nodes)
    if (n.kind == Kind::Variable) slots.insert(n.slot);
  std::vector<std::string> out;
  for (int s : slots) out.push_back(data_->vars[static_cast<std::size_t>(s)]);
  return out;
}

void Expression::print_node(int id, std::string& out) const {
  const Node& n = data_->nodes[static_cast<std::size_t>(id)];
  switch (n.kind) {
    case Kind::Number: {
      char buf[32];
      const auto res = std::to_chars(buf, buf + sizeof buf, n.value);
      out.append(buf, res.ptr);
      return;
    }
    case Kind::Variable:
      out += data_->vars[static_cast<std::size_t>(n.slot)];
      return;
    case Kind::Negate:
      out += "(-";
      print_node(n.lhs, out);
      out += ')';
      return;
    case Kind::Call:
      out += function_name(n.fn);
      out += '(';
      print_node(n.lhs, out);
      out += ')';
      return;
    default:
      break;
  }
  static constexpr std::string_view ops[] = {"", "", "", " + ", " - ", " * ", " / ", " ^ "};
  out += '(';
  print_node(n.lhs, out);
  out += ops[static_cast<int>(n.kind)];
  print_node(n.rhs, out);
  out += ')';
}

std::string Expression::to_string() const {
  std::string out;
  print_node(data_->root, out);
  return out;
}

bool operator==(const Expression& a, const Expression& b) { return nodes_equal(a, a.root(), b, b.root()); }

}  // namespace slacqm

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "isowork/errors.hpp"
#include "isowork/expr.hpp"

namespace isowork {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr std::array<std::pair<std::string_view, Func>, 7> kFunctions{{
    {"sin", Func::Sin},
    {"cos", Func::Cos},
    {"tan", Func::Tan},
    {"exp", Func::Exp},
    {"log", Func::Log},
    {"sqrt", Func::Sqrt},
    {"abs", Func::Abs},
}};

std::optional<Func> lookup_function(std::string_view name) {
  for (const auto& [fname, fn] : kFunctions) {
    if (fname == name) {
      return fn;
    }
  }
  return std::nullopt;
}

std::optional<Var> lookup_variable(std::string_view name) {
  if (name == "x") return Var::X;
  if (name == "y") return Var::Y;
  if (name == "z") return Var::Z;
  if (name == "t") return Var::T;
  return std::nullopt;
}

std::optional<NamedConstant> lookup_constant(std::string_view name) {
  if (name == "pi") return NamedConstant::Pi;
  if (name == "e") return NamedConstant::E;
  return std::nullopt;
}

constexpr int kMaxNesting = 256;

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse_all() {
    Expr e = expr();
    skip_space();
    if (pos_ < src_.size()) {
      throw SyntaxError(pos_, "unexpected '" + std::string(1, src_[pos_]) + "'");
    }
    return e;
  }

 private:
  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxNesting) {
        throw SyntaxError(parser.pos_, "expression nested too deeply");
      }
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  // Consumes `c` after optional whitespace.
  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    DepthGuard guard(*this);
    Expr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(BinaryOp::Add, lhs, term());
      } else if (accept('-')) {
        lhs = Expr::binary(BinaryOp::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(BinaryOp::Mul, lhs, factor());
      } else if (accept('/')) {
        lhs = Expr::binary(BinaryOp::Div, lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    DepthGuard guard(*this);
    if (accept('-')) {
      return Expr::negate(factor());
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (accept('^')) {
      return Expr::binary(BinaryOp::Pow, base, factor());
    }
    return base;
  }

  Expr atom() {
    skip_space();
    if (pos_ >= src_.size()) {
      throw SyntaxError(pos_, "unexpected end of input");
    }
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      expect_close();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return number();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return identifier();
    }
    throw SyntaxError(pos_, "unexpected '" + std::string(1, c) + "'");
  }

  void expect_close() {
    if (!accept(')')) {
      skip_space();
      throw SyntaxError(pos_, pos_ < src_.size() ? "expected ')'" : "unexpected end of input, expected ')'");
    }
  }

  Expr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa_digits = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa_digits += digits();
    }
    if (mantissa_digits == 0) {
      throw SyntaxError(start, "malformed number");
    }
    // Exponent only when a digit follows, so "2e" is not swallowed.
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) {
        ++look;
      }
      if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
        pos_ = look;
        digits();
      }
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc() || ptr != src_.data() + pos_ || !std::isfinite(value)) {
      throw SyntaxError(start, "number out of range");
    }
    return Expr::number(value);
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = src_.substr(start, pos_ - start);
    skip_space();
    const bool is_call = pos_ < src_.size() && src_[pos_] == '(';
    if (is_call) {
      const auto fn = lookup_function(name);
      if (!fn) {
        throw UnknownIdentifier(start, std::string(name));
      }
      ++pos_;
      Expr arg = expr();
      expect_close();
      return Expr::call(*fn, arg);
    }
    if (const auto var = lookup_variable(name)) {
      return Expr::variable(*var);
    }
    if (const auto c = lookup_constant(name)) {
      return Expr::constant(*c);
    }
    if (lookup_function(name)) {
      throw SyntaxError(pos_, "expected '(' after function '" + std::string(name) + "'");
    }
    throw UnknownIdentifier(start, std::string(name));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

void print(const Expr& e, std::string& out) {
  std::visit(Overloaded{
                 [&](const NumberNode& n) {
                   if (n.name == NamedConstant::Pi) {
                     out += "pi";
                   } else if (n.name == NamedConstant::E) {
                     out += "e";
                   } else {
                     char buf[64];
                     const auto res = std::to_chars(buf, buf + sizeof buf, n.value);
                     out.append(buf, res.ptr);
                   }
                 },
                 [&](const VariableNode& v) { out += to_string(v.var); },
                 [&](const NegateNode& n) {
                   out += "(-";
                   print(n.operand, out);
                   out += ')';
                 },
                 [&](const BinaryNode& b) {
                   static constexpr std::array<std::string_view, 5> kOps{" + ", " - ", " * ", " / ", " ^ "};
                   out += '(';
                   print(b.lhs, out);
                   out += kOps[static_cast<std::size_t>(b.op)];
                   print(b.rhs, out);
                   out += ')';
                 },
                 [&](const CallNode& c) {
                   out += to_string(c.fn);
                   out += '(';
                   print(c.arg, out);
                   out += ')';
                 },
             },
             e.node().kind);
}

}  // namespace

std::string_view to_string(Var v) {
  static constexpr std::array<std::string_view, 4> kNames{"x", "y", "z", "t"};
  return kNames[static_cast<std::size_t>(v)];
}

std::string_view to_string(Func f) { return kFunctions[static_cast<std::size_t>(f)].first; }

Expr Expr::number(double value) {
  if (!std::isfinite(value)) {
    throw DomainError("expression literals must be finite");
  }
  if (std::signbit(value)) {
    return negate(number(-value));
  }
  return Expr(std::make_shared<const ExprNode>(ExprNode{NumberNode{value}}));
}

Expr Expr::constant(NamedConstant c) {
  switch (c) {
    case NamedConstant::Pi:
      return Expr(std::make_shared<const ExprNode>(ExprNode{NumberNode{std::numbers::pi, c}}));
    case NamedConstant::E:
      return Expr(std::make_shared<const ExprNode>(ExprNode{NumberNode{std::numbers::e, c}}));
    case NamedConstant::None:
      break;
  }
  throw std::invalid_argument("Expr::constant requires a named constant");
}

Expr Expr::variable(Var v) { return Expr(std::make_shared<const ExprNode>(ExprNode{VariableNode{v}})); }

Expr Expr::negate(Expr operand) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{NegateNode{std::move(operand)}}));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{BinaryNode{op, std::move(lhs), std::move(rhs)}}));
}

Expr Expr::call(Func fn, Expr arg) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{CallNode{fn, std::move(arg)}}));
}

VarSet Expr::variables() const {
  return std::visit(Overloaded{
                        [](const NumberNode&) -> VarSet { return 0; },
                        [](const VariableNode& v) -> VarSet { return var_bit(v.var); },
                        [](const NegateNode& n) -> VarSet { return n.operand.variables(); },
                        [](const BinaryNode& b) -> VarSet { return b.lhs.variables() | b.rhs.variables(); },
                        [](const CallNode& c) -> VarSet { return c.arg.variables(); },
                    },
                    node().kind);
}

Expr Expr::substitute(Var v, const Expr& replacement) const {
  return std::visit(Overloaded{
                        [&](const NumberNode&) { return *this; },
                        [&](const VariableNode& n) { return n.var == v ? replacement : *this; },
                        [&](const NegateNode& n) { return negate(n.operand.substitute(v, replacement)); },
                        [&](const BinaryNode& b) {
                          return binary(b.op, b.lhs.substitute(v, replacement), b.rhs.substitute(v, replacement));
                        },
                        [&](const CallNode& c) { return call(c.fn, c.arg.substitute(v, replacement)); },
                    },
                    node().kind);
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) {
    return true;
  }
  const auto& ka = a.node().kind;
  const auto& kb = b.node().kind;
  if (ka.index() != kb.index()) {
    return false;
  }
  return std::visit(Overloaded{
                        [&](const NumberNode& n) {
                          const auto& m = std::get<NumberNode>(kb);
                          return n.value == m.value && n.name == m.name;
                        },
                        [&](const VariableNode& n) { return n.var == std::get<VariableNode>(kb).var; },
                        [&](const NegateNode& n) { return n.operand == std::get<NegateNode>(kb).operand; },
                        [&](const BinaryNode& n) {
                          const auto& m = std::get<BinaryNode>(kb);
                          return n.op == m.op && n.lhs == m.lhs && n.rhs == m.rhs;
                        },
                        [&](const CallNode& n) {
                          const auto& m = std::get<CallNode>(kb);
                          return n.fn == m.fn && n.arg == m.arg;
                        },
                    },
                    ka);
}

Expr operator+(Expr a, Expr b) { return Expr::binary(BinaryOp::Add, std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return Expr::binary(BinaryOp::Sub, std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return Expr::binary(BinaryOp::Mul, std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return Expr::binary(BinaryOp::Div, std::move(a), std::move(b)); }
Expr operator-(Expr a) { return Expr::negate(std::move(a)); }

Expr parse(std::string_view src) { return Parser(src).parse_all(); }

std::string pretty_print(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

}  // namespace isowork

#ifndef ISOWORK_EXPR_HPP
#define ISOWORK_EXPR_HPP

// Scalar expression language for force components and curve coordinates.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' factor)?
//   atom   := NUMBER | IDENT | IDENT '(' expr ')' | '(' expr ')'
//
// Variables are x, y, z, t; named constants pi and e; functions sin, cos,
// tan, exp, log, sqrt, abs.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "isowork/dual.hpp"

namespace isowork {

enum class Var : std::uint8_t { X, Y, Z, T };
enum class BinaryOp : std::uint8_t { Add, Sub, Mul, Div, Pow };
enum class Func : std::uint8_t { Sin, Cos, Tan, Exp, Log, Sqrt, Abs };
enum class NamedConstant : std::uint8_t { None, Pi, E };

std::string_view to_string(Var v);
std::string_view to_string(Func f);

/// Bit set of variables, bit k for Var(k).
using VarSet = std::uint8_t;
constexpr VarSet var_bit(Var v) { return static_cast<VarSet>(1u << static_cast<unsigned>(v)); }

struct ExprNode;

/// Immutable expression tree handle. Copies share structure.
class Expr {
 public:
  /// Finite literal. Negative values are stored as a negated literal, the
  /// same shape the parser produces for "-2".
  static Expr number(double value);
  static Expr constant(NamedConstant c);
  static Expr variable(Var v);
  static Expr negate(Expr operand);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
  static Expr call(Func fn, Expr arg);

  const ExprNode& node() const noexcept { return *node_; }

  /// Variables occurring anywhere in the tree.
  VarSet variables() const;

  /// Replaces every occurrence of `v` with `replacement`.
  Expr substitute(Var v, const Expr& replacement) const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ExprNode> node_;
};

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);

struct NumberNode {
  double value;
  NamedConstant name = NamedConstant::None;
};
struct VariableNode {
  Var var;
};
struct NegateNode {
  Expr operand;
};
struct BinaryNode {
  BinaryOp op;
  Expr lhs;
  Expr rhs;
};
struct CallNode {
  Func fn;
  Expr arg;
};

struct ExprNode {
  std::variant<NumberNode, VariableNode, NegateNode, BinaryNode, CallNode> kind;
};

/// Throws SyntaxError or UnknownIdentifier.
Expr parse(std::string_view src);

/// Fully parenthesized canonical text; parse(pretty_print(e)) == e.
std::string pretty_print(const Expr& e);

/// Variable bindings for evaluation.
template <class T>
class Env {
 public:
  Env() = default;
  Env(std::initializer_list<std::pair<Var, T>> bindings) {
    for (const auto& [var, value] : bindings) {
      bind(var, value);
    }
  }
  Env& bind(Var v, T value) {
    slots_[static_cast<std::size_t>(v)] = value;
    return *this;
  }
  const std::optional<T>& get(Var v) const { return slots_[static_cast<std::size_t>(v)]; }

 private:
  std::array<std::optional<T>, 4> slots_{};
};

/// IEEE double evaluation. Throws DomainError for log/sqrt outside their
/// domain, division by zero, a negative base under a non-integer exponent,
/// or an unbound variable.
double eval(const Expr& e, const Env<double>& env);

/// Value plus exact chain-rule derivative; the caller seeds each variable's
/// derivative. Same errors as eval, plus DomainError where the derivative
/// does not exist (sqrt at 0 with a moving argument, ...).
DualValue eval_dual(const Expr& e, const Env<DualValue>& env);

}  // namespace isowork

#endif  // ISOWORK_EXPR_HPP

#include <cmath>
#include <string>
#include <type_traits>

#include "isowork/errors.hpp"
#include "isowork/expr.hpp"

namespace isowork {

namespace {

double checked_div(double a, double b) {
  if (b == 0.0) {
    throw DomainError("division by zero");
  }
  return a / b;
}

DualValue checked_div(DualValue a, DualValue b) {
  if (b.value == 0.0) {
    throw DomainError("division by zero");
  }
  return a / b;
}

double checked_pow(double base, double exponent) {
  if (base < 0.0 && std::trunc(exponent) != exponent) {
    throw DomainError("negative base under a non-integer exponent");
  }
  if (base == 0.0 && exponent < 0.0) {
    throw DomainError("division by zero (zero base, negative exponent)");
  }
  return std::pow(base, exponent);
}

DualValue checked_pow(DualValue base, DualValue exponent) {
  const double value = checked_pow(base.value, exponent.value);
  double deriv = 0.0;
  if (base.deriv != 0.0 && exponent.value != 0.0) {
    if (base.value == 0.0 && exponent.value < 1.0) {
      throw DomainError("power is not differentiable at a zero base");
    }
    deriv += exponent.value * checked_pow(base.value, exponent.value - 1.0) * base.deriv;
  }
  if (exponent.deriv != 0.0) {
    if (base.value <= 0.0) {
      throw DomainError("variable exponent requires a positive base");
    }
    deriv += value * std::log(base.value) * exponent.deriv;
  }
  return {value, deriv};
}

double apply(Func fn, double a) {
  switch (fn) {
    case Func::Sin:
      return std::sin(a);
    case Func::Cos:
      return std::cos(a);
    case Func::Tan:
      return std::tan(a);
    case Func::Exp:
      return std::exp(a);
    case Func::Log:
      if (a <= 0.0) {
        throw DomainError("log of non-positive argument");
      }
      return std::log(a);
    case Func::Sqrt:
      if (a < 0.0) {
        throw DomainError("sqrt of negative argument");
      }
      return std::sqrt(a);
    case Func::Abs:
      return std::abs(a);
  }
  throw DomainError("unknown function");
}

DualValue apply(Func fn, DualValue a) {
  const double value = apply(fn, a.value);
  switch (fn) {
    case Func::Sin:
      return {value, std::cos(a.value) * a.deriv};
    case Func::Cos:
      return {value, -std::sin(a.value) * a.deriv};
    case Func::Tan: {
      const double c = std::cos(a.value);
      return {value, a.deriv / (c * c)};
    }
    case Func::Exp:
      return {value, value * a.deriv};
    case Func::Log:
      return {value, a.deriv / a.value};
    case Func::Sqrt:
      if (value == 0.0) {
        if (a.deriv != 0.0) {
          throw DomainError("sqrt is not differentiable at 0");
        }
        return {0.0, 0.0};
      }
      return {value, a.deriv / (2.0 * value)};
    case Func::Abs: {
      // Zero slope at the kink.
      const double sign = a.value > 0.0 ? 1.0 : (a.value < 0.0 ? -1.0 : 0.0);
      return {value, sign * a.deriv};
    }
  }
  throw DomainError("unknown function");
}

template <class T>
T constant_of(double v) {
  if constexpr (std::is_same_v<T, double>) {
    return v;
  } else {
    return T{v, 0.0};
  }
}

template <class T>
T evaluate(const Expr& e, const Env<T>& env) {
  const auto& kind = e.node().kind;
  switch (kind.index()) {
    case 0:
      return constant_of<T>(std::get<NumberNode>(kind).value);
    case 1: {
      const Var v = std::get<VariableNode>(kind).var;
      const auto& bound = env.get(v);
      if (!bound) {
        throw DomainError("unbound variable '" + std::string(to_string(v)) + "'");
      }
      return *bound;
    }
    case 2:
      return -evaluate(std::get<NegateNode>(kind).operand, env);
    case 3: {
      const auto& b = std::get<BinaryNode>(kind);
      const T lhs = evaluate(b.lhs, env);
      const T rhs = evaluate(b.rhs, env);
      switch (b.op) {
        case BinaryOp::Add:
          return lhs + rhs;
        case BinaryOp::Sub:
          return lhs - rhs;
        case BinaryOp::Mul:
          return lhs * rhs;
        case BinaryOp::Div:
          return checked_div(lhs, rhs);
        case BinaryOp::Pow:
          return checked_pow(lhs, rhs);
      }
      break;
    }
    case 4: {
      const auto& c = std::get<CallNode>(kind);
      return apply(c.fn, evaluate(c.arg, env));
    }
    default:
      break;
  }
  throw DomainError("malformed expression node");
}

}  // namespace

double eval(const Expr& e, const Env<double>& env) { return evaluate(e, env); }

DualValue eval_dual(const Expr& e, const Env<DualValue>& env) { return evaluate(e, env); }

}  // namespace isowork

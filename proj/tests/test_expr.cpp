#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>

#include "isowork/errors.hpp"
#include "isowork/expr.hpp"
#include "isowork/generators.hpp"

using namespace isowork;

namespace {

Expr x() { return Expr::variable(Var::X); }
Expr y() { return Expr::variable(Var::Y); }
Expr z() { return Expr::variable(Var::Z); }
Expr t() { return Expr::variable(Var::T); }
Expr n(double v) { return Expr::number(v); }

std::size_t syntax_offset(const std::string& src) {
  try {
    parse(src);
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no syntax error for '" << src << "'";
  return 0;
}

}  // namespace

TEST(Parse, Precedence) {
  EXPECT_EQ(parse("x + y*z"), x() + y() * z());
  EXPECT_EQ(parse("-t^2"), Expr::negate(Expr::binary(BinaryOp::Pow, t(), n(2))));
  EXPECT_EQ(parse("x - y - z"), (x() - y()) - z());
  EXPECT_EQ(parse("x / y * z"), (x() / y()) * z());
  EXPECT_EQ(parse("x^y^z"), Expr::binary(BinaryOp::Pow, x(), Expr::binary(BinaryOp::Pow, y(), z())));
  EXPECT_EQ(parse("2^-x"), Expr::binary(BinaryOp::Pow, n(2), Expr::negate(x())));
  EXPECT_EQ(parse("  sin ( x )\t"), Expr::call(Func::Sin, x()));
}

TEST(Parse, LiteralsAndConstants) {
  EXPECT_EQ(parse("1.5e3"), n(1500.0));
  EXPECT_EQ(parse(".25"), n(0.25));
  EXPECT_EQ(parse("pi"), Expr::constant(NamedConstant::Pi));
  EXPECT_EQ(parse("e"), Expr::constant(NamedConstant::E));
  // "2e" is the number 2 followed by the constant e: a syntax error.
  EXPECT_THROW(parse("2e"), SyntaxError);
}

TEST(Parse, SyntaxErrorOffsets) {
  EXPECT_EQ(syntax_offset("sin("), 4u);
  EXPECT_EQ(syntax_offset(""), 0u);
  EXPECT_EQ(syntax_offset("x +"), 3u);
  EXPECT_EQ(syntax_offset("(x"), 2u);
  EXPECT_EQ(syntax_offset("x y"), 2u);
  EXPECT_EQ(syntax_offset("x $ y"), 2u);
}

TEST(Parse, UnknownIdentifiers) {
  EXPECT_THROW(parse("w + 1"), UnknownIdentifier);
  EXPECT_THROW(parse("cosh(x)"), UnknownIdentifier);
  EXPECT_THROW(parse("sin x"), SyntaxError);
}

TEST(Parse, NestingIsBounded) {
  const std::string deep = std::string(10000, '(') + "x" + std::string(10000, ')');
  EXPECT_THROW(parse(deep), SyntaxError);
  const std::string ok = std::string(100, '(') + "x" + std::string(100, ')');
  EXPECT_EQ(parse(ok), x());
}

TEST(Eval, Examples) {
  EXPECT_EQ(eval(parse("x+y*z"), {{Var::X, 1.0}, {Var::Y, 2.0}, {Var::Z, 3.0}}), 7.0);
  EXPECT_EQ(eval(parse("sqrt(t)"), {{Var::T, 4.0}}), 2.0);
  EXPECT_THROW(eval(parse("1/ (x - x)"), {{Var::X, 5.0}}), DomainError);
}

TEST(Eval, DomainErrors) {
  EXPECT_THROW(eval(parse("log(0)"), {}), DomainError);
  EXPECT_THROW(eval(parse("sqrt(-1)"), {}), DomainError);
  EXPECT_THROW(eval(parse("(-2)^0.5"), {}), DomainError);
  EXPECT_THROW(eval(parse("0^(-1)"), {}), DomainError);
  EXPECT_THROW(eval(parse("x"), {}), DomainError);
  EXPECT_EQ(eval(parse("(-2)^3"), {}), -8.0);
  EXPECT_EQ(eval(parse("pi"), {}), std::numbers::pi);
}

TEST(EvalDual, Examples) {
  EXPECT_EQ(eval_dual(parse("t^2"), {{Var::T, {3.0, 1.0}}}), (DualValue{9.0, 6.0}));
  EXPECT_EQ(eval_dual(parse("sin(t)"), {{Var::T, {0.0, 1.0}}}), (DualValue{0.0, 1.0}));
  EXPECT_EQ(eval_dual(parse("x*t"), {{Var::X, {2.0, 0.0}}, {Var::T, {5.0, 1.0}}}), (DualValue{10.0, 2.0}));
}

TEST(EvalDual, ValueMatchesEval) {
  gen::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Expr e = gen::smooth_expr(rng, 5, var_bit(Var::T));
    const double t0 = std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
    EXPECT_EQ(eval_dual(e, {{Var::T, {t0, 1.0}}}).value, eval(e, {{Var::T, t0}}));
  }
}

TEST(EvalDual, MatchesCentralDifferences) {
  gen::Rng rng(8);
  const double h = 1e-6;
  for (int i = 0; i < 500; ++i) {
    const Expr e = gen::smooth_expr(rng, 4, var_bit(Var::T));
    const double t0 = std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
    const double d = eval_dual(e, {{Var::T, {t0, 1.0}}}).deriv;
    const double fd = (eval(e, {{Var::T, t0 + h}}) - eval(e, {{Var::T, t0 - h}})) / (2.0 * h);
    EXPECT_NEAR(d, fd, 1e-6 * std::max(1.0, std::abs(fd))) << pretty_print(e) << " at " << t0;
  }
}

TEST(EvalDual, NonDifferentiablePoints) {
  EXPECT_THROW(eval_dual(parse("sqrt(t)"), {{Var::T, {0.0, 1.0}}}), DomainError);
  EXPECT_EQ(eval_dual(parse("abs(t)"), {{Var::T, {0.0, 1.0}}}).deriv, 0.0);
  EXPECT_EQ(eval_dual(parse("sqrt(x)"), {{Var::X, {0.0, 0.0}}}), (DualValue{0.0, 0.0}));
}

TEST(PrettyPrint, Examples) {
  EXPECT_EQ(pretty_print(x() + y()), "(x + y)");
  EXPECT_EQ(pretty_print(Expr::negate(t())), "(-t)");
  EXPECT_EQ(pretty_print(Expr::call(Func::Sin, x())), "sin(x)");
  EXPECT_EQ(pretty_print(parse("2*pi")), "(2 * pi)");
}

TEST(PrettyPrint, RoundTripsRandomTrees) {
  gen::Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    const Expr e = gen::any_expr(rng, 8);
    const std::string text = pretty_print(e);
    EXPECT_EQ(parse(text), e) << text;
  }
}

TEST(Eval, Deterministic) {
  const Expr e = parse("exp(sin(x*y)) / (2 + cos(z))");
  const Env<double> env{{Var::X, 0.3}, {Var::Y, -1.7}, {Var::Z, 2.2}};
  const double a = eval(e, env);
  const double b = eval(parse("exp(sin(x*y)) / (2 + cos(z))"), env);
  EXPECT_EQ(std::memcmp(&a, &b, sizeof a), 0);
}

TEST(Expr, SubstituteAndVariables) {
  const Expr e = parse("x*y + t");
  EXPECT_EQ(e.variables(), var_bit(Var::X) | var_bit(Var::Y) | var_bit(Var::T));
  const Expr s = e.substitute(Var::X, n(2.0));
  EXPECT_EQ(s, n(2.0) * y() + t());
  EXPECT_THROW(Expr::number(std::nan("")), DomainError);
}

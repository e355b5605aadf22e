#include "isowork/generators.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace isowork::gen {

namespace {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int pick(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

Expr num(double v) { return Expr::number(v); }

Expr sin_of(Expr e) { return Expr::call(Func::Sin, std::move(e)); }
Expr cos_of(Expr e) { return Expr::call(Func::Cos, std::move(e)); }

Expr pow_of(Expr base, Expr exponent) { return Expr::binary(BinaryOp::Pow, std::move(base), std::move(exponent)); }

std::vector<Var> vars_in(VarSet vars) {
  std::vector<Var> out;
  for (Var v : {Var::X, Var::Y, Var::Z, Var::T}) {
    if ((vars & var_bit(v)) != 0) {
      out.push_back(v);
    }
  }
  return out;
}

Expr any_literal(Rng& rng) {
  switch (pick(rng, 6)) {
    case 0:
      return num(static_cast<double>(pick(rng, 10)));
    case 1:
      return num(uniform(rng, 0.0, 10.0));
    case 2:
      return num(std::pow(10.0, uniform(rng, -12.0, 12.0)));
    case 3:
      return Expr::constant(NamedConstant::Pi);
    case 4:
      return Expr::constant(NamedConstant::E);
    default:
      return num(0.1 * pick(rng, 30));
  }
}

}  // namespace

Expr any_expr(Rng& rng, int max_depth) {
  if (max_depth <= 0 || pick(rng, 4) == 0) {
    if (pick(rng, 2) == 0) {
      return Expr::variable(static_cast<Var>(pick(rng, 4)));
    }
    return any_literal(rng);
  }
  switch (pick(rng, 3)) {
    case 0:
      return Expr::negate(any_expr(rng, max_depth - 1));
    case 1:
      return Expr::binary(static_cast<BinaryOp>(pick(rng, 5)), any_expr(rng, max_depth - 1),
                          any_expr(rng, max_depth - 1));
    default:
      return Expr::call(static_cast<Func>(pick(rng, 7)), any_expr(rng, max_depth - 1));
  }
}

Expr smooth_expr(Rng& rng, int max_depth, VarSet vars) {
  const std::vector<Var> pool = vars_in(vars);
  if (max_depth <= 0 || pick(rng, 4) == 0) {
    if (!pool.empty() && pick(rng, 3) != 0) {
      return Expr::variable(pool[static_cast<std::size_t>(pick(rng, static_cast<int>(pool.size())))]);
    }
    return num(uniform(rng, 0.5, 2.0));
  }
  const int d = max_depth - 1;
  switch (pick(rng, 12)) {
    case 0:
      return smooth_expr(rng, d, vars) + smooth_expr(rng, d, vars);
    case 1:
      return smooth_expr(rng, d, vars) - smooth_expr(rng, d, vars);
    case 2:
      return smooth_expr(rng, d, vars) * smooth_expr(rng, d, vars);
    case 3:
      return smooth_expr(rng, d, vars) / (num(2.0) + sin_of(smooth_expr(rng, d, vars)));
    case 4:
      return sin_of(smooth_expr(rng, d, vars));
    case 5:
      return cos_of(smooth_expr(rng, d, vars));
    case 6:
      return Expr::call(Func::Exp, sin_of(smooth_expr(rng, d, vars)));
    case 7:
      return Expr::call(Func::Sqrt, num(1.0) + pow_of(smooth_expr(rng, d, vars), num(2.0)));
    case 8:
      return Expr::call(Func::Log, num(1.0) + pow_of(smooth_expr(rng, d, vars), num(2.0)));
    case 9:
      return Expr::call(Func::Tan, sin_of(smooth_expr(rng, d, vars)) / num(2.0));
    case 10:
      return Expr::call(Func::Abs, num(2.0) + cos_of(smooth_expr(rng, d, vars)));
    default:
      return pow_of(num(2.0) + cos_of(smooth_expr(rng, d, vars)), sin_of(smooth_expr(rng, d, vars)));
  }
}

Vec3Q isotropic_direction(Rng& rng) {
  for (;;) {
    const double u = uniform(rng, -2.0, 2.0);
    const double v = uniform(rng, -2.0, 2.0);
    if (std::abs(u + v) < 0.3) {
      continue;
    }
    const Vec3Q d{u, v, -(u * v) / (u + v)};
    // Permute so the completed coordinate is not always last.
    switch (pick(rng, 3)) {
      case 0:
        return d;
      case 1:
        return apply_q(d);
      default:
        return apply_q(apply_q(d));
    }
  }
}

CollinearPair collinear_pair(Rng& rng) {
  const Vec3Q d = isotropic_direction(rng);
  const Vec3Q p0{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
  const Expr h = num(uniform(rng, 0.5, 2.0)) * Expr::variable(Var::T) + smooth_expr(rng, 2, var_bit(Var::T));
  const Expr k = smooth_expr(rng, 3, var_bit(Var::X) | var_bit(Var::Y) | var_bit(Var::Z));
  const double alpha = uniform(rng, -1.0, 0.5);
  const double beta = alpha + uniform(rng, 0.5, 2.0);
  return {ForceField(num(d.u) * k, num(d.v) * k, num(d.q) * k),
          ParamCurve(num(p0.u) + num(d.u) * h, num(p0.v) + num(d.v) * h, num(p0.q) + num(d.q) * h, alpha, beta)};
}

namespace {

// c0 + amp * sin(smooth) with c0 - amp >= 0.5.
Expr positive_field(Rng& rng) {
  const double c0 = uniform(rng, 1.5, 3.0);
  const double amp = uniform(rng, 0.0, 1.0);
  return num(c0) + num(amp) * sin_of(smooth_expr(rng, 2, var_bit(Var::X) | var_bit(Var::Y) | var_bit(Var::Z)));
}

// a t + b sin(w t) with |b w| <= a / 2, so the derivative stays >= a / 2.
Expr increasing_coordinate(Rng& rng) {
  const double a = uniform(rng, 0.5, 2.0);
  const double w = uniform(rng, 0.5, 3.0);
  const double b = uniform(rng, -0.5, 0.5) * a / w;
  const Expr t = Expr::variable(Var::T);
  return num(a) * t + num(b) * sin_of(num(w) * t);
}

}  // namespace

CompletedPair case_iv_pair(Rng& rng) {
  const double alpha = uniform(rng, -1.0, 0.5);
  const double beta = alpha + uniform(rng, 0.5, 2.0);
  return {complete_isotropic_force(positive_field(rng), positive_field(rng)),
          complete_isotropic_curve(increasing_coordinate(rng), increasing_coordinate(rng), uniform(rng, -1.0, 1.0),
                                   alpha, beta)};
}

ParamPair case_ii_pair(Rng& rng) {
  const double alpha = uniform(rng, -1.0, 0.5);
  const double beta = alpha + uniform(rng, 0.5, 2.0);
  const Expr z = increasing_coordinate(rng) * (pick(rng, 2) == 0 ? num(1.0) : num(-1.0));
  return {complete_isotropic_force(positive_field(rng), positive_field(rng)),
          ParamCurve(num(uniform(rng, -2.0, 2.0)), num(uniform(rng, -2.0, 2.0)), z, alpha, beta)};
}

CompletedPair case_iii_pair(Rng& rng) {
  const double alpha = uniform(rng, -1.0, 0.5);
  const double beta = alpha + uniform(rng, 0.5, 2.0);
  const Expr s = smooth_expr(rng, 3, var_bit(Var::X) | var_bit(Var::Y) | var_bit(Var::Z)) + num(0.5);
  return {ForceField(num(0.0), num(0.0), s),
          complete_isotropic_curve(increasing_coordinate(rng), increasing_coordinate(rng), uniform(rng, -1.0, 1.0),
                                   alpha, beta)};
}

}  // namespace isowork::gen

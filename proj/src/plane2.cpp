#include "isowork/plane2.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "isowork/algebra.hpp"
#include "isowork/errors.hpp"

namespace isowork {

namespace {

constexpr double kTwoThirdsPi = 2.0 * std::numbers::pi / 3.0;

double eval_plane(const Expr& p, double x, double y) { return eval(p, Env<double>{{Var::X, x}, {Var::Y, y}}); }

void require_plane_expr(const Expr& p) {
  if ((p.variables() & ~(var_bit(Var::X) | var_bit(Var::Y))) != 0) {
    throw InvalidInput("plane force magnitude P may only use x and y");
  }
}

void require_interval(double alpha, double beta) {
  if (!(std::isfinite(alpha) && std::isfinite(beta) && alpha < beta)) {
    throw InvalidInput("parameter interval requires finite alpha < beta");
  }
}

WorkResult from_quad(const QuadResult& q, double coefficient, WorkMethod method) {
  WorkResult r;
  r.value = coefficient * q.value;
  r.error_estimate = std::abs(coefficient) * q.error_estimate;
  r.method = method;
  r.depth_exceeded = q.depth_exceeded;
  return r;
}

}  // namespace

std::string_view to_string(PlaneCase c) {
  switch (c) {
    case PlaneCase::A_NoIsotropic:
      return "A";
    case PlaneCase::B_DoubleRoot:
      return "B";
    case PlaneCase::C_TwoDirections:
      return "C";
    case PlaneCase::D_RightAngle:
      return "D";
  }
  return "?";
}

std::string_view to_string(PlaneLine l) { return l == PlaneLine::C1 ? "c1" : "c2"; }

PlaneMetric plane_metric(double c, double s) {
  const double g_i_qi = c;
  const double g_i_qj = (c - c * c) / s;
  const double g_j_qi = s;
  const double g_j_qj = -(c * c) / (1.0 + c);
  // f(a, b) = g(a, Qb) + g(Qa, b), and g(Qa, b) = g(b, Qa) by symmetry of g.
  return {2.0 * g_i_qi, g_i_qj + g_j_qi, 2.0 * g_j_qj};
}

PlaneContext build_plane(double phi) {
  if (!(phi > 0.0 && phi <= kTwoThirdsPi)) {
    throw OutOfRange("plane angle must lie in (0, 2pi/3], got " + std::to_string(phi));
  }
  PlaneContext ctx{};
  ctx.phi = phi;
  ctx.c = angle_cosine(phi);
  ctx.s = std::sin(phi);
  const double c = ctx.c;
  const double s = ctx.s;
  ctx.f_ii = 2.0 * c;
  ctx.f_ij = (1.0 - c) * (1.0 + 2.0 * c) / s;
  ctx.f_jj = -2.0 * c * c / (1.0 + c);
  ctx.discriminant = (1.0 + c) * (1.0 + 3.0 * c);

  if (std::abs(c) <= kRightAngleTolerance) {
    ctx.case_tag = PlaneCase::D_RightAngle;
  } else if (std::abs(ctx.discriminant) <= kDoubleRootTolerance) {
    ctx.case_tag = PlaneCase::B_DoubleRoot;
    const double k = s * (1.0 + 2.0 * c) / (2.0 * c * c);
    ctx.k1 = k;
    ctx.k2 = k;
  } else if (ctx.discriminant < 0.0) {
    ctx.case_tag = PlaneCase::A_NoIsotropic;
  } else {
    ctx.case_tag = PlaneCase::C_TwoDirections;
    // Roots of c^2 k^2 + b k + q0 = 0 without cancellation.
    const double a2 = c * c;
    const double b = -s * (1.0 + 2.0 * c);
    const double q0 = -(1.0 + c) * c;
    const double root_d = std::sqrt(ctx.discriminant);
    const double qq = -0.5 * (b + std::copysign(root_d, b));
    double r1 = qq / a2;
    double r2 = q0 / qq;
    if (r1 > r2) {
      std::swap(r1, r2);
    }
    ctx.k1 = r1;
    ctx.k2 = r2;
  }
  return ctx;
}

CircleSpec circle_spec(const PlaneContext& ctx, double a) {
  const double c = ctx.c;
  return {a, c, (1.0 - c) * (1.0 + 2.0 * c) / ctx.s, -(c * c) / (1.0 + c), 0.5 * a * a};
}

double circle_residual(const PlaneContext& ctx, double a, double x, double y) {
  const CircleSpec spec = circle_spec(ctx, a);
  return spec.coeff_xx * x * x + spec.coeff_xy * x * y + spec.coeff_yy * y * y - spec.rhs;
}

double slope_quadratic(const PlaneContext& ctx, double k) {
  const double c = ctx.c;
  return c * c * k * k - ctx.s * (1.0 + 2.0 * c) * k - (1.0 + c) * c;
}

std::vector<IsoDirection> iso_directions(const PlaneContext& ctx) {
  switch (ctx.case_tag) {
    case PlaneCase::A_NoIsotropic:
      return {};
    case PlaneCase::B_DoubleRoot:
      return {{IsoDirection::Kind::Slope, *ctx.k1}};
    case PlaneCase::C_TwoDirections:
      return {{IsoDirection::Kind::Slope, *ctx.k1}, {IsoDirection::Kind::Slope, *ctx.k2}};
    case PlaneCase::D_RightAngle:
      return {{IsoDirection::Kind::Slope, 0.0}, {IsoDirection::Kind::VerticalAxis, 0.0}};
  }
  return {};
}

WorkResult work_cross(const PlaneContext& ctx, const Expr& p, PlaneLine source, PlaneLine target, double alpha,
                      double beta, double tol) {
  require_plane_expr(p);
  require_interval(alpha, beta);
  if (ctx.case_tag == PlaneCase::A_NoIsotropic || ctx.case_tag == PlaneCase::D_RightAngle) {
    throw CaseMismatch("cross-line work needs isotropic slopes (case B or C), plane is in case " +
                       std::string(to_string(ctx.case_tag)));
  }
  if (source == target || ctx.case_tag == PlaneCase::B_DoubleRoot) {
    WorkResult r;
    r.method = WorkMethod::PlaneSameLine;
    return r;
  }
  const double k = target == PlaneLine::C1 ? *ctx.k1 : *ctx.k2;
  const double coefficient = (1.0 + 3.0 * ctx.c) / (ctx.c * ctx.c);
  const QuadResult q = integrate([&](double t) { return eval_plane(p, t, k * t); }, alpha, beta, tol);
  return from_quad(q, coefficient, WorkMethod::PlaneCross);
}

WorkResult work_right_angle(const Expr& p, RightAngleOrientation orientation, double alpha, double beta, double tol) {
  require_plane_expr(p);
  require_interval(alpha, beta);
  // f(Qi, i) with cos(phi) = 0.
  const double coefficient = plane_metric(0.0, 1.0).f_ij;
  const QuadResult q =
      orientation == RightAngleOrientation::ForceAlongQi
          ? integrate([&](double t) { return eval_plane(p, t, 0.0); }, alpha, beta, tol)
          : integrate([&](double t) { return eval_plane(p, 0.0, t); }, alpha, beta, tol);
  return from_quad(q, coefficient, WorkMethod::PlaneRightAngle);
}

Table1Angles default_table1_angles() {
  const double double_root = std::acos(-1.0 / 3.0);
  return {0.5 * (double_root + kTwoThirdsPi), double_root, std::numbers::pi / 3.0, std::numbers::pi / 2.0};
}

std::vector<Table1Row> table1_report(const Expr& p, double alpha, double beta, const Table1Angles& angles,
                                     double tol) {
  require_plane_expr(p);
  require_interval(alpha, beta);
  const std::string two_directions = "(0, pi/2) U (pi/2, arccos(-1/3))";
  const std::string coefficient = "(1+3cos(phi))/cos(phi)^2";

  std::vector<Table1Row> rows;
  const PlaneContext none = build_plane(angles.no_isotropic);
  if (none.case_tag != PlaneCase::A_NoIsotropic) {
    throw InvalidInput("no-isotropic representative angle is not in case A");
  }
  rows.push_back({"(arccos(-1/3), 2pi/3)", "-", "no is. curves", "-", angles.no_isotropic, std::nullopt});

  const PlaneContext single = build_plane(angles.double_root);
  if (single.case_tag != PlaneCase::B_DoubleRoot) {
    throw InvalidInput("double-root representative angle is not in case B");
  }
  const WorkResult along_single = work_cross(single, p, PlaneLine::C1, PlaneLine::C1, alpha, beta, tol);
  rows.push_back({"arccos(-1/3)", "c: y=sqrt(2)x", "c: y=sqrt(2)x", "0", angles.double_root, along_single.value});

  const PlaneContext two = build_plane(angles.two_directions);
  if (two.case_tag != PlaneCase::C_TwoDirections) {
    throw InvalidInput("two-direction representative angle is not in case C");
  }
  auto cross = [&](PlaneLine source, PlaneLine target) {
    return work_cross(two, p, source, target, alpha, beta, tol).value;
  };
  rows.push_back({two_directions, "c1: y=k1x", "c1: y=k1x", "0", angles.two_directions,
                  cross(PlaneLine::C1, PlaneLine::C1)});
  rows.push_back({two_directions, "c2: y=k2x", "c2: y=k2x", "0", angles.two_directions,
                  cross(PlaneLine::C2, PlaneLine::C2)});
  // "acts on" is the line traversed, "trajectory" the line carrying F.
  rows.push_back({two_directions, "c1: y=k1x", "c2: y=k2x", coefficient + " * int P(t,k1 t) dt", angles.two_directions,
                  cross(PlaneLine::C2, PlaneLine::C1)});
  rows.push_back({two_directions, "c2: y=k2x", "c1: y=k1x", coefficient + " * int P(t,k2 t) dt", angles.two_directions,
                  cross(PlaneLine::C1, PlaneLine::C2)});

  const PlaneContext right = build_plane(angles.right_angle);
  if (right.case_tag != PlaneCase::D_RightAngle) {
    throw InvalidInput("right-angle representative angle is not in case D");
  }
  rows.push_back({"pi/2", "c1: x=0", "c2: y=0", "int P(t,0) dt", angles.right_angle,
                  work_right_angle(p, RightAngleOrientation::ForceAlongQi, alpha, beta, tol).value});
  rows.push_back({"pi/2", "c1: y=0", "c2: x=0", "int P(0,t) dt", angles.right_angle,
                  work_right_angle(p, RightAngleOrientation::ForceAlongI, alpha, beta, tol).value});
  return rows;
}

}  // namespace isowork

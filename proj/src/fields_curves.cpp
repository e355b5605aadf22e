#include "isowork/fields_curves.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isowork/errors.hpp"

namespace isowork {

namespace {

constexpr VarSet kSpaceVars = var_bit(Var::X) | var_bit(Var::Y) | var_bit(Var::Z);
constexpr VarSet kParamVars = var_bit(Var::T);

void require_vars(const Expr& e, VarSet allowed, const char* what) {
  if ((e.variables() & ~allowed) != 0) {
    throw InvalidInput(std::string(what) + " uses a variable outside its allowed set");
  }
}

void require_interval(double alpha, double beta) {
  if (!(std::isfinite(alpha) && std::isfinite(beta) && alpha < beta)) {
    throw InvalidInput("parameter interval requires finite alpha < beta");
  }
}

void require_in_interval(double t, double alpha, double beta) {
  if (!(t >= alpha && t <= beta)) {
    throw OutOfRange("curve parameter " + std::to_string(t) + " outside [" + std::to_string(alpha) + ", " +
                     std::to_string(beta) + "]");
  }
}

DualValue at_param(const Expr& e, double t) { return eval_dual(e, Env<DualValue>{{Var::T, DualValue{t, 1.0}}}); }

double z_rate_from(double dx, double dy) {
  const double sum = dx + dy;
  if (std::abs(sum) < kDegenerateTangentTolerance * std::max({1.0, std::abs(dx), std::abs(dy)})) {
    throw DegenerateTangent("x' + y' vanishes; z' = -x'y'/(x'+y') is undefined");
  }
  return -(dx * dy) / sum;
}

}  // namespace

ForceField::ForceField(Expr p, Expr r, Expr s) : p_(std::move(p)), r_(std::move(r)), s_(std::move(s)) {
  require_vars(p_, kSpaceVars, "force component P");
  require_vars(r_, kSpaceVars, "force component R");
  require_vars(s_, kSpaceVars, "force component S");
}

Vec3Q ForceField::at(const Vec3Q& point) const {
  const Env<double> env{{Var::X, point.u}, {Var::Y, point.v}, {Var::Z, point.q}};
  return {eval(p_, env), eval(r_, env), eval(s_, env)};
}

ParamCurve::ParamCurve(Expr x, Expr y, Expr z, double alpha, double beta)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), alpha_(alpha), beta_(beta) {
  require_interval(alpha, beta);
  require_vars(x_, kParamVars, "curve coordinate x");
  require_vars(y_, kParamVars, "curve coordinate y");
  require_vars(z_, kParamVars, "curve coordinate z");
}

CurveSample ParamCurve::sample(double t) const {
  require_in_interval(t, alpha_, beta_);
  const DualValue x = at_param(x_, t);
  const DualValue y = at_param(y_, t);
  const DualValue z = at_param(z_, t);
  return {{x.value, y.value, z.value}, {x.deriv, y.deriv, z.deriv}};
}

double CompletedCurve::z_rate(double t) const {
  const DualValue x = at_param(x_, t);
  const DualValue y = at_param(y_, t);
  return z_rate_from(x.deriv, y.deriv);
}

std::vector<double> CompletedCurve::grid() const {
  std::vector<double> knots;
  knots.reserve(panels_.size() + 1);
  for (const Panel& p : panels_) {
    knots.push_back(p.a);
  }
  knots.push_back(panels_.back().b);
  return knots;
}

CurveSample CompletedCurve::sample(double t) const {
  require_in_interval(t, alpha(), beta());
  const DualValue x = at_param(x_, t);
  const DualValue y = at_param(y_, t);
  const double dz = z_rate_from(x.deriv, y.deriv);

  // Last panel starting at or before t.
  const auto it = std::upper_bound(panels_.begin(), panels_.end(), t,
                                   [](double value, const Panel& p) { return value < p.a; });
  const auto k = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, (it - panels_.begin()) - 1));
  double z = z_at_start_[k];
  if (t > panels_[k].a) {
    z += gauss_panel([this](double s) { return z_rate(s); }, panels_[k].a, t);
  }
  return {{x.value, y.value, z}, {x.deriv, y.deriv, dz}};
}

double curve_isotropy_residual(const Curve& c, double t0) {
  const Vec3Q d = c.sample(t0).tangent;
  return isotropy_residual_orthonormal(d);
}

double force_isotropy_residual(const ForceField& force, const Vec3Q& pt) {
  return isotropy_residual_orthonormal(force.at(pt));
}

CompletedCurve complete_isotropic_curve(Expr x, Expr y, double z0, double alpha, double beta, double tol) {
  require_interval(alpha, beta);
  require_vars(x, kParamVars, "curve coordinate x");
  require_vars(y, kParamVars, "curve coordinate y");
  if (!std::isfinite(z0)) {
    throw InvalidInput("initial z must be finite");
  }
  CompletedCurve curve(std::move(x), std::move(y), z0);
  Partition partition = adaptive_partition([&curve](double s) { return curve.z_rate(s); }, alpha, beta, tol);
  // The partition only evaluates interior Gauss nodes; check the knots too.
  for (const Panel& p : partition.panels) {
    curve.z_rate(p.a);
  }
  curve.z_rate(beta);

  curve.panels_ = std::move(partition.panels);
  curve.z_at_start_.reserve(curve.panels_.size());
  double z = z0;
  for (const Panel& p : curve.panels_) {
    curve.z_at_start_.push_back(z);
    z += p.value;
  }
  return curve;
}

ForceField complete_isotropic_force(Expr p, Expr r) {
  Expr s = Expr::negate(p * r) / (p + r);
  return ForceField(std::move(p), std::move(r), std::move(s));
}

CollinearityReport collinearity_check(const ForceField& force, const Curve& c, std::size_t n_samples) {
  if (n_samples < 2) {
    throw InvalidInput("collinearity check needs at least two samples");
  }
  CollinearityReport report;
  for (double t : chebyshev_points(c.alpha(), c.beta(), n_samples)) {
    const CurveSample s = c.sample(t);
    const Vec3Q f = force.at(s.position);
    const Vec3Q& d = s.tangent;
    const double scale = std::max(coord_norm(f), 1.0) * std::max(coord_norm(d), 1.0);
    const double m1 = f.u * d.v - f.v * d.u;
    const double m2 = f.v * d.q - f.q * d.v;
    const double m3 = f.u * d.q - f.q * d.u;
    report.max_minor = std::max({report.max_minor, std::abs(m1) / scale, std::abs(m2) / scale, std::abs(m3) / scale});
    const double dd = coord_dot(d, d);
    if (dd > 0.0) {
      report.k_samples.push_back({t, coord_dot(f, d) / dd});
    }
  }
  report.collinear = report.max_minor <= kCollinearityTolerance;
  return report;
}

}  // namespace isowork

#include "isowork/work3d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isowork/errors.hpp"

namespace isowork {

namespace {

constexpr double kRounding = 16.0 * std::numeric_limits<double>::epsilon();
constexpr double kSingularDenominator = 1e-12;

struct NearSingular {};

// Integrates `value` adaptively and widens the estimate by the rounding
// carried by the magnitudes of the terms that were summed into it.
template <class ValueFn, class MagnitudeFn>
QuadResult integrate_terms(ValueFn value, MagnitudeFn magnitude, double alpha, double beta, double tol) {
  Partition part = adaptive_partition(value, alpha, beta, tol);
  double magnitude_integral = 0.0;
  for (const Panel& p : part.panels) {
    magnitude_integral += std::abs(gauss_panel(magnitude, p.a, p.b));
  }
  part.total.error_estimate += kRounding * magnitude_integral;
  part.total.nodes_used += part.panels.size() * kGaussOrder;
  return part.total;
}

WorkResult from_quad(const QuadResult& q, WorkMethod method) {
  WorkResult r;
  r.value = q.value;
  r.method = method;
  r.error_estimate = q.error_estimate;
  r.depth_exceeded = q.depth_exceeded;
  return r;
}

struct Sampled {
  Vec3Q force;
  Vec3Q tangent;
};

template <class Fn>
double max_over_samples(const ForceField& force, const Curve& c, Fn fn) {
  double worst = 0.0;
  for (double t : chebyshev_points(c.alpha(), c.beta(), kSampleCount)) {
    const CurveSample s = c.sample(t);
    worst = std::max(worst, fn(Sampled{force.at(s.position), s.tangent}));
  }
  return worst;
}

double tangent_sum_measure(const Sampled& s) {
  const Vec3Q& d = s.tangent;
  return std::abs(d.u + d.v) / std::max({1.0, std::abs(d.u), std::abs(d.v)});
}

double force_sum_measure(const Sampled& s) {
  const Vec3Q& f = s.force;
  return std::abs(f.u + f.v) / std::max({1.0, std::abs(f.u), std::abs(f.v)});
}

double force_isotropy_measure(const Sampled& s) {
  return std::abs(isotropy_residual_orthonormal(s.force)) / std::max(1.0, coord_dot(s.force, s.force));
}

double curve_isotropy_measure(const Sampled& s) {
  return std::abs(isotropy_residual_orthonormal(s.tangent)) / std::max(1.0, coord_dot(s.tangent, s.tangent));
}

}  // namespace

std::string_view to_string(WorkMethod m) {
  switch (m) {
    case WorkMethod::CaseI_Collinear:
      return "case_i";
    case WorkMethod::CaseII_DxDyZero:
      return "case_ii";
    case WorkMethod::CaseIII_PRZero:
      return "case_iii";
    case WorkMethod::CaseIV_General:
      return "case_iv";
    case WorkMethod::DirectQuadrature:
      return "direct";
    case WorkMethod::PlaneSameLine:
      return "plane_same_line";
    case WorkMethod::PlaneCross:
      return "plane_cross";
    case WorkMethod::PlaneRightAngle:
      return "plane_right_angle";
  }
  return "unknown";
}

CaseDiagnostics diagnose(const ForceField& force, const Curve& c) {
  CaseDiagnostics d;
  for (double t : chebyshev_points(c.alpha(), c.beta(), kSampleCount)) {
    const CurveSample cs = c.sample(t);
    const Sampled s{force.at(cs.position), cs.tangent};
    d.force_residual = std::max(d.force_residual, force_isotropy_measure(s));
    d.curve_residual = std::max(d.curve_residual, curve_isotropy_measure(s));
    d.tangent_sum = std::max(d.tangent_sum, tangent_sum_measure(s));
    d.force_sum = std::max(d.force_sum, force_sum_measure(s));
  }
  d.isotropic = d.force_residual <= kIsotropyAdmissionTolerance && d.curve_residual <= kIsotropyAdmissionTolerance;
  d.collinearity = collinearity_check(force, c, kSampleCount);
  if (d.collinearity.collinear) {
    d.tag = WorkMethod::CaseI_Collinear;
  } else if (d.tangent_sum <= kVanishingTolerance) {
    d.tag = WorkMethod::CaseII_DxDyZero;
  } else if (d.force_sum <= kVanishingTolerance) {
    d.tag = WorkMethod::CaseIII_PRZero;
  } else {
    d.tag = WorkMethod::CaseIV_General;
  }
  return d;
}

CaseDiagnostics classify_case(const ForceField& force, const Curve& c) {
  CaseDiagnostics d = diagnose(force, c);
  if (!d.isotropic) {
    throw NotIsotropic(d.force_residual, d.curve_residual);
  }
  return d;
}

WorkResult work_direct(const ForceField& force, const Curve& c, double tol) {
  auto terms = [&](double t) {
    const CurveSample s = c.sample(t);
    const Vec3Q f = force.at(s.position);
    const Vec3Q& d = s.tangent;
    return std::array<double, 3>{f.u * (d.v + d.q), f.v * (d.u + d.q), f.q * (d.u + d.v)};
  };
  const QuadResult q = integrate_terms(
      [&](double t) {
        const auto a = terms(t);
        return a[0] + a[1] + a[2];
      },
      [&](double t) {
        const auto a = terms(t);
        return std::abs(a[0]) + std::abs(a[1]) + std::abs(a[2]);
      },
      c.alpha(), c.beta(), tol);
  return from_quad(q, WorkMethod::DirectQuadrature);
}

WorkResult work_case_ii(const ForceField& force, const Curve& c, double tol) {
  auto integrand = [&](double t) {
    const CurveSample s = c.sample(t);
    const Vec3Q f = force.at(s.position);
    return (f.u + f.v) * s.tangent.q;
  };
  auto magnitude = [&](double t) {
    const CurveSample s = c.sample(t);
    const Vec3Q f = force.at(s.position);
    return (std::abs(f.u) + std::abs(f.v)) * std::abs(s.tangent.q);
  };
  WorkResult r = from_quad(integrate_terms(integrand, magnitude, c.alpha(), c.beta(), tol), WorkMethod::CaseII_DxDyZero);
  r.case_assumption_residual = max_over_samples(force, c, tangent_sum_measure);
  return r;
}

WorkResult work_case_iii(const ForceField& force, const Curve& c, double tol) {
  auto integrand = [&](double t) {
    const CurveSample s = c.sample(t);
    return force.at(s.position).q * (s.tangent.u + s.tangent.v);
  };
  auto magnitude = [&](double t) {
    const CurveSample s = c.sample(t);
    return std::abs(force.at(s.position).q) * (std::abs(s.tangent.u) + std::abs(s.tangent.v));
  };
  WorkResult r = from_quad(integrate_terms(integrand, magnitude, c.alpha(), c.beta(), tol), WorkMethod::CaseIII_PRZero);
  r.case_assumption_residual = max_over_samples(force, c, force_sum_measure);
  return r;
}

WorkResult work_case_iv(const ForceField& force, const Curve& c, double tol) {
  auto parts = [&](double t) {
    const CurveSample s = c.sample(t);
    const Vec3Q f = force.at(s.position);
    const Vec3Q& d = s.tangent;
    const double den = (f.u + f.v) * (d.u + d.v);
    const double scale =
        std::max({1.0, std::abs(f.u), std::abs(f.v)}) * std::max({1.0, std::abs(d.u), std::abs(d.v)});
    if (std::abs(den) < kSingularDenominator * scale) {
      throw NearSingular{};
    }
    const double num = f.u * d.v - f.v * d.u;
    const double num_magnitude = std::abs(f.u * d.v) + std::abs(f.v * d.u);
    return std::array<double, 3>{num, num_magnitude, den};
  };
  const double residual = max_over_samples(force, c, [](const Sampled& s) {
    return std::max(force_isotropy_measure(s), curve_isotropy_measure(s));
  });
  try {
    const QuadResult q = integrate_terms(
        [&](double t) {
          const auto p = parts(t);
          return p[0] * p[0] / p[2];
        },
        [&](double t) {
          const auto p = parts(t);
          return p[1] * p[1] / std::abs(p[2]);
        },
        c.alpha(), c.beta(), tol);
    WorkResult r = from_quad(q, WorkMethod::CaseIV_General);
    r.case_assumption_residual = residual;
    return r;
  } catch (const NearSingular&) {
    WorkResult r = work_direct(force, c, tol);
    r.method = WorkMethod::CaseIV_General;
    r.case_assumption_residual = residual;
    r.fell_back_to_direct = true;
    return r;
  }
}

WorkResult work(const ForceField& force, const Curve& c, double tol) {
  const CaseDiagnostics diag = classify_case(force, c);
  WorkResult result;
  switch (diag.tag) {
    case WorkMethod::CaseI_Collinear:
      result.method = WorkMethod::CaseI_Collinear;
      result.value = 0.0;
      result.case_assumption_residual = diag.collinearity.max_minor;
      return result;
    case WorkMethod::CaseII_DxDyZero:
      result = work_case_ii(force, c, tol);
      break;
    case WorkMethod::CaseIII_PRZero:
      result = work_case_iii(force, c, tol);
      break;
    default:
      result = work_case_iv(force, c, tol);
      break;
  }
  const WorkResult direct = work_direct(force, c, tol);
  const double delta = std::abs(result.value - direct.value);
  const double allowed = kCrossCheckFactor * (result.error_estimate + direct.error_estimate);
  if (!(delta <= allowed)) {
    throw CrossCheckFailure(result.value, direct.value, allowed);
  }
  result.cross_check_delta = delta;
  result.depth_exceeded = result.depth_exceeded || direct.depth_exceeded;
  return result;
}

}  // namespace isowork

#ifndef ISOWORK_WORK3D_HPP
#define ISOWORK_WORK3D_HPP

#include <string_view>

#include "isowork/fields_curves.hpp"
#include "isowork/quadrature.hpp"

namespace isowork {

// Work A = integral of f(F, dr) in the orthonormal Q-basis, where
// f(F, r') = P(y' + z') + R(x' + z') + S(x' + y').

enum class WorkMethod {
  CaseI_Collinear,
  CaseII_DxDyZero,
  CaseIII_PRZero,
  CaseIV_General,
  DirectQuadrature,
  // Work along isotropic lines of the plane {i, Qi}.
  PlaneSameLine,
  PlaneCross,
  PlaneRightAngle,
};

std::string_view to_string(WorkMethod m);

struct WorkResult {
  double value = 0.0;
  WorkMethod method = WorkMethod::DirectQuadrature;
  double error_estimate = 0.0;
  /// Largest violation of the detected case's defining condition.
  double case_assumption_residual = 0.0;
  /// |case formula - direct quadrature| when cross-validated.
  double cross_check_delta = 0.0;
  bool depth_exceeded = false;
  /// The case-IV denominator came too close to zero; value is from work_direct.
  bool fell_back_to_direct = false;
};

/// Scale-normalized isotropy residual admitted before dispatch.
inline constexpr double kIsotropyAdmissionTolerance = 1e-8;
/// "Identically zero" threshold for x' + y' and P + R along the curve.
inline constexpr double kVanishingTolerance = 1e-9;
/// Case-formula and direct values must agree within this many combined estimates.
inline constexpr double kCrossCheckFactor = 10.0;

struct CaseDiagnostics {
  double force_residual = 0.0;  // max |PR + RS + SP| / max(1, |F|^2)
  double curve_residual = 0.0;  // max |x'y' + y'z' + x'z'| / max(1, |r'|^2)
  CollinearityReport collinearity;
  double tangent_sum = 0.0;  // max |x' + y'| / max(1, |x'|, |y'|)
  double force_sum = 0.0;    // max |P + R| / max(1, |P|, |R|)
  bool isotropic = false;
  /// Meaningful only when `isotropic`.
  WorkMethod tag = WorkMethod::DirectQuadrature;
};

/// Samples F and c at kSampleCount Chebyshev points and picks the case with
/// precedence I > II > III > IV. Never throws for non-isotropic data.
CaseDiagnostics diagnose(const ForceField& force, const Curve& c);

/// diagnose(), throwing NotIsotropic when the hypotheses fail.
CaseDiagnostics classify_case(const ForceField& force, const Curve& c);

WorkResult work_direct(const ForceField& force, const Curve& c, double tol = kDefaultTolerance);

/// x and y constant along c: integral of (P + R)(x, y, z(t)) z'(t).
WorkResult work_case_ii(const ForceField& force, const Curve& c, double tol = kDefaultTolerance);

/// P = R = 0 along c: integral of S (x' + y').
WorkResult work_case_iii(const ForceField& force, const Curve& c, double tol = kDefaultTolerance);

/// Integral of (P y' - R x')^2 / ((P + R)(x' + y')); falls back to work_direct
/// when the denominator is negligible at a node.
WorkResult work_case_iv(const ForceField& force, const Curve& c, double tol = kDefaultTolerance);

/// Classifies, applies the case formula and cross-checks it against
/// work_direct. Collinear pairs return exactly 0 without quadrature.
/// Throws NotIsotropic or CrossCheckFailure.
WorkResult work(const ForceField& force, const Curve& c, double tol = kDefaultTolerance);

}  // namespace isowork

#endif  // ISOWORK_WORK3D_HPP

#ifndef ISOWORK_PLANE2_HPP
#define ISOWORK_PLANE2_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isowork/expr.hpp"
#include "isowork/quadrature.hpp"
#include "isowork/work3d.hpp"

namespace isowork {

// The 2-plane spanned by i and Qi (angle phi between them), with the
// orthonormal basis {i, j}, j = (Qi - cos(phi) i) / sin(phi). Points are
// w = x i + y j; an isotropic line is y = k x.

enum class PlaneCase {
  A_NoIsotropic,    // D < 0
  B_DoubleRoot,     // D = 0, phi = arccos(-1/3)
  C_TwoDirections,  // D > 0, phi != pi/2
  D_RightAngle,     // phi = pi/2, isotropic axes x = 0 and y = 0
};

std::string_view to_string(PlaneCase c);

/// |cos(phi)| at or below this is the right-angle case.
inline constexpr double kRightAngleTolerance = 1e-9;
/// |D| at or below this is the double-root case.
inline constexpr double kDoubleRootTolerance = 1e-9;

/// f on the basis {i, j} from the g-products g(i, Qi) = cos, g(i, Qj) =
/// (cos - cos^2)/sin, g(j, Qi) = sin, g(j, Qj) = -cos^2/(1 + cos).
struct PlaneMetric {
  double f_ii;
  double f_ij;
  double f_jj;
};
PlaneMetric plane_metric(double c, double s);

struct PlaneContext {
  double phi;
  double c;  // cos(phi), exactly 0 at pi/2
  double s;  // sin(phi)
  double f_ii;
  double f_ij;
  double f_jj;
  PlaneCase case_tag;
  double discriminant;  // (1 + c)(1 + 3c)
  std::optional<double> k1;  // k1 <= k2; equal in case B
  std::optional<double> k2;
};

/// Throws OutOfRange unless phi is in (0, 2 pi / 3].
PlaneContext build_plane(double phi);

/// Coefficients of f(w, w) = a^2 written as cxx x^2 + cxy xy + cyy y^2 = a^2 / 2.
struct CircleSpec {
  double a;
  double coeff_xx;
  double coeff_xy;
  double coeff_yy;
  double rhs;
};
CircleSpec circle_spec(const PlaneContext& ctx, double a);

/// cxx x^2 + cxy xy + cyy y^2 - a^2 / 2.
double circle_residual(const PlaneContext& ctx, double a, double x, double y);

/// c^2 k^2 - s(1 + 2c) k - (1 + c) c.
double slope_quadratic(const PlaneContext& ctx, double k);

struct IsoDirection {
  enum class Kind { Slope, VerticalAxis };
  Kind kind;
  double slope;  // 0 for VerticalAxis
};

/// A: none; B: the double root once; C: k1, k2; D: y = 0 (slope 0) and the
/// vertical axis x = 0.
std::vector<IsoDirection> iso_directions(const PlaneContext& ctx);

enum class PlaneLine { C1, C2 };

std::string_view to_string(PlaneLine l);

/// Work of F = P (i + k_source j) along the line y = k_target x, x = t in
/// [alpha, beta]: (1 + 3c)/c^2 times the integral of P(t, k_target t).
/// Same line, or the single line of case B, gives 0 without quadrature.
/// Throws CaseMismatch in cases A and D.
WorkResult work_cross(const PlaneContext& ctx, const Expr& p, PlaneLine source, PlaneLine target, double alpha,
                      double beta, double tol = kDefaultTolerance);

enum class RightAngleOrientation {
  ForceAlongQi,  // F = P(t, 0) Qi, dr = dt i: integral of P(t, 0)
  ForceAlongI,   // F = P(0, t) i, dr = dt Qi: integral of P(0, t)
};

WorkResult work_right_angle(const Expr& p, RightAngleOrientation orientation, double alpha, double beta,
                            double tol = kDefaultTolerance);

struct Table1Row {
  std::string regime;
  std::string acts_on;
  std::string trajectory;
  /// "-" when there are no isotropic curves, "0", or the symbolic formula.
  std::string formula;
  double phi;
  std::optional<double> value;  // absent for row 1
};

/// Representative angles for the four regimes of the table.
struct Table1Angles {
  double no_isotropic;  // in (arccos(-1/3), 2pi/3)
  double double_root;   // arccos(-1/3)
  double two_directions;
  double right_angle;
};
Table1Angles default_table1_angles();

/// The eight rows of the work table for a caller-supplied P(x, y).
std::vector<Table1Row> table1_report(const Expr& p, double alpha, double beta,
                                     const Table1Angles& angles = default_table1_angles(),
                                     double tol = kDefaultTolerance);

}  // namespace isowork

#endif  // ISOWORK_PLANE2_HPP

#ifndef ISOWORK_FIELDS_CURVES_HPP
#define ISOWORK_FIELDS_CURVES_HPP

#include <cstddef>
#include <vector>

#include "isowork/algebra.hpp"
#include "isowork/expr.hpp"
#include "isowork/quadrature.hpp"

namespace isowork {

/// Samples used wherever a condition must hold "identically" along a curve.
inline constexpr std::size_t kSampleCount = 64;
/// Scale-normalized bound on the 2x2 minors of (F, r') for collinearity.
inline constexpr double kCollinearityTolerance = 1e-9;
/// |x' + y'| below this times max(1, |x'|, |y'|) is a degenerate tangent.
inline constexpr double kDegenerateTangentTolerance = 1e-12;

/// F = P i + R Qi + S Q^2 i with components over (x, y, z).
class ForceField {
 public:
  /// Throws InvalidInput if a component uses the parameter t.
  ForceField(Expr p, Expr r, Expr s);

  const Expr& p() const noexcept { return p_; }
  const Expr& r() const noexcept { return r_; }
  const Expr& s() const noexcept { return s_; }

  Vec3Q at(const Vec3Q& point) const;

 private:
  Expr p_;
  Expr r_;
  Expr s_;
};

struct CurveSample {
  Vec3Q position;
  Vec3Q tangent;  // dr/dt
};

/// A smooth curve in the tangent space, parameterized over [alpha, beta].
class Curve {
 public:
  virtual ~Curve() = default;
  virtual double alpha() const = 0;
  virtual double beta() const = 0;
  /// Position and tangent at t; t must lie in [alpha, beta].
  virtual CurveSample sample(double t) const = 0;
};

/// r(t) = x(t) i + y(t) Qi + z(t) Q^2 i with tangents from forward-mode
/// differentiation.
class ParamCurve final : public Curve {
 public:
  /// Throws InvalidInput unless alpha < beta (both finite) and every
  /// coordinate depends on t alone.
  ParamCurve(Expr x, Expr y, Expr z, double alpha, double beta);

  double alpha() const override { return alpha_; }
  double beta() const override { return beta_; }
  CurveSample sample(double t) const override;

  const Expr& x() const noexcept { return x_; }
  const Expr& y() const noexcept { return y_; }
  const Expr& z() const noexcept { return z_; }

 private:
  Expr x_;
  Expr y_;
  Expr z_;
  double alpha_;
  double beta_;
};

/// Isotropic curve whose z-coordinate solves z' = -x'y' / (x' + y') with
/// z(alpha) = z0. z is integrated once over an adaptive panel grid; inside a
/// panel a single Gauss panel from the panel start gives z(t).
class CompletedCurve final : public Curve {
 public:
  double alpha() const override { return panels_.front().a; }
  double beta() const override { return panels_.back().b; }
  CurveSample sample(double t) const override;

  const Expr& x() const noexcept { return x_; }
  const Expr& y() const noexcept { return y_; }
  double z0() const noexcept { return z0_; }
  /// Panel boundaries of the integration grid, alpha first, beta last.
  std::vector<double> grid() const;
  /// z'(t); throws DegenerateTangent where x' + y' vanishes.
  double z_rate(double t) const;

 private:
  friend CompletedCurve complete_isotropic_curve(Expr x, Expr y, double z0, double alpha, double beta, double tol);
  CompletedCurve(Expr x, Expr y, double z0) : x_(std::move(x)), y_(std::move(y)), z0_(z0) {}

  Expr x_;
  Expr y_;
  double z0_;
  std::vector<Panel> panels_;
  std::vector<double> z_at_start_;  // z at panels_[k].a
};

/// x'y' + y'z' + x'z' at t0 (orthonormal frame).
double curve_isotropy_residual(const Curve& c, double t0);

/// PR + RS + SP at pt.
double force_isotropy_residual(const ForceField& force, const Vec3Q& pt);

/// Throws DegenerateTangent if |x' + y'| is negligible at any grid node, and
/// InvalidInput for a bad interval or coordinates depending on more than t.
CompletedCurve complete_isotropic_curve(Expr x, Expr y, double z0, double alpha, double beta,
                                        double tol = kDefaultTolerance);

/// (P, R, -PR/(P + R)). The quotient raises DomainError where P + R = 0.
ForceField complete_isotropic_force(Expr p, Expr r);

struct KSample {
  double t;
  double k;  // F = k r' when collinear
};

struct CollinearityReport {
  bool collinear = false;
  double max_minor = 0.0;
  std::vector<KSample> k_samples;
};

/// Compares F(c(t)) with r'(t) at n Chebyshev points; n >= 2.
CollinearityReport collinearity_check(const ForceField& force, const Curve& c, std::size_t n_samples = kSampleCount);

}  // namespace isowork

#endif  // ISOWORK_FIELDS_CURVES_HPP

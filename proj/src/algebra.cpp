#include "isowork/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "isowork/errors.hpp"

namespace isowork {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTwoThirdsPi = 2.0 * std::numbers::pi / 3.0;

// Symmetric bilinear form with every product paired as r_a w_b + r_b w_a, so
// swapping the arguments reproduces the same floating-point operations.
double symmetric_form(const Mat3& m, const Vec3Q& r, const Vec3Q& w) {
  double sum = m[0][0] * (r.u * w.u) + m[1][1] * (r.v * w.v) + m[2][2] * (r.q * w.q);
  sum += m[0][1] * (r.u * w.v + r.v * w.u);
  sum += m[1][2] * (r.v * w.q + r.q * w.v);
  sum += m[0][2] * (r.u * w.q + r.q * w.u);
  return sum;
}

}  // namespace

double coord_norm(const Vec3Q& a) { return std::sqrt(coord_dot(a, a)); }

bool is_finite(const Vec3Q& a) { return std::isfinite(a.u) && std::isfinite(a.v) && std::isfinite(a.q); }

double angle_cosine(double phi) {
  if (phi == kHalfPi) {
    return 0.0;
  }
  return std::cos(phi);
}

std::string_view to_string(CausalTag tag) {
  switch (tag) {
    case CausalTag::SpaceLike:
      return "space_like";
    case CausalTag::Isotropic:
      return "isotropic";
    case CausalTag::TimeLike:
      return "time_like";
  }
  return "unknown";
}

QFrame::QFrame(double phi) : phi_(phi), cos_(angle_cosine(phi)) {
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      gram_g_[a][b] = a == b ? 1.0 : cos_;
    }
  }
  // f[a][b] = g[a][s(b)] + g[s(a)][b] with s the cyclic successor 0->1->2->0.
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      mat_f_[a][b] = gram_g_[a][(b + 1) % 3] + gram_g_[(a + 1) % 3][b];
    }
  }
}

QFrame QFrame::from_angle(double phi) {
  if (!(phi > 0.0 && phi < kTwoThirdsPi)) {
    throw OutOfRange("Q-basis angle must lie in (0, 2pi/3), got " + std::to_string(phi));
  }
  return QFrame(phi);
}

QFrame QFrame::orthonormal() { return QFrame(kHalfPi); }

double g_inner(const QFrame& frame, const Vec3Q& r, const Vec3Q& w) { return symmetric_form(frame.gram_g(), r, w); }

double f_inner(const QFrame& frame, const Vec3Q& r, const Vec3Q& w) { return symmetric_form(frame.mat_f(), r, w); }

VectorClass classify(const QFrame& frame, const Vec3Q& r) {
  const double f_norm = f_inner(frame, r, r);
  const double scale = std::max(1.0, coord_dot(r, r));
  if (std::abs(f_norm) <= kClassificationTolerance * scale) {
    return {CausalTag::Isotropic, f_norm};
  }
  return {f_norm > 0.0 ? CausalTag::SpaceLike : CausalTag::TimeLike, f_norm};
}

std::array<double, 3> symmetric_eigenvalues(const Mat3& m) {
  Eigen::Matrix3d a;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      a(r, c) = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
  }
  const Eigen::Vector3d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(a, Eigen::EigenvaluesOnly).eigenvalues();
  return {ev(0), ev(1), ev(2)};
}

}  // namespace isowork

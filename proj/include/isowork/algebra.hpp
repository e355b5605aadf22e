#ifndef ISOWORK_ALGEBRA_HPP
#define ISOWORK_ALGEBRA_HPP

#include <array>
#include <string_view>

namespace isowork {

/// Coordinates (u, v, q) of a tangent vector with respect to a Q-basis
/// {i, Qi, Q^2 i}. Curve positions and force values use the same type.
struct Vec3Q {
  double u = 0.0;
  double v = 0.0;
  double q = 0.0;

  constexpr double operator[](int k) const { return k == 0 ? u : (k == 1 ? v : q); }
  friend constexpr bool operator==(const Vec3Q&, const Vec3Q&) = default;
};

constexpr Vec3Q operator+(const Vec3Q& a, const Vec3Q& b) { return {a.u + b.u, a.v + b.v, a.q + b.q}; }
constexpr Vec3Q operator-(const Vec3Q& a, const Vec3Q& b) { return {a.u - b.u, a.v - b.v, a.q - b.q}; }
constexpr Vec3Q operator*(double s, const Vec3Q& a) { return {s * a.u, s * a.v, s * a.q}; }

/// Coordinate (Euclidean) dot product; not a metric on the tangent space.
constexpr double coord_dot(const Vec3Q& a, const Vec3Q& b) { return a.u * b.u + a.v * b.v + a.q * b.q; }
double coord_norm(const Vec3Q& a);
bool is_finite(const Vec3Q& a);

using Mat3 = std::array<std::array<double, 3>, 3>;

/// cos(phi), returning exactly 0 for the double nearest pi/2 so that the
/// orthonormal frame carries exact matrix entries.
double angle_cosine(double phi);

/// Coordinates of Qr: (u, v, q) -> (q, u, v). Q^3 is the identity.
constexpr Vec3Q apply_q(const Vec3Q& r) { return {r.q, r.u, r.v}; }

/// Frame data of a Q-basis whose pairwise angles all equal phi.
///
/// g is circulant(1, cos phi, cos phi) on the basis; the associated form
/// f(r, w) = g(r, Qw) + g(Qr, w) is circulant(2 cos phi, 1 + cos phi,
/// 1 + cos phi). The basis exists for phi strictly inside (0, 2 pi / 3).
class QFrame {
 public:
  /// Throws OutOfRange unless 0 < phi < 2 pi / 3.
  static QFrame from_angle(double phi);
  /// phi = pi / 2: g is the identity and f = circulant(0, 1, 1).
  static QFrame orthonormal();

  double phi() const noexcept { return phi_; }
  double cos_phi() const noexcept { return cos_; }
  const Mat3& gram_g() const noexcept { return gram_g_; }
  const Mat3& mat_f() const noexcept { return mat_f_; }

 private:
  explicit QFrame(double phi);

  double phi_;
  double cos_;
  Mat3 gram_g_{};
  Mat3 mat_f_{};
};

/// r^T G w.
double g_inner(const QFrame& frame, const Vec3Q& r, const Vec3Q& w);

/// g(r, Qw) + g(Qr, w).
double f_inner(const QFrame& frame, const Vec3Q& r, const Vec3Q& w);

enum class CausalTag { SpaceLike, Isotropic, TimeLike };

std::string_view to_string(CausalTag tag);

struct VectorClass {
  CausalTag tag;
  double f_norm;
};

/// |f(r, r)| <= this * max(1, |r|^2) counts as isotropic.
inline constexpr double kClassificationTolerance = 1e-9;

/// Sign convention: f(r, r) > 0 is space-like, f(r, r) < 0 is time-like.
VectorClass classify(const QFrame& frame, const Vec3Q& r);

/// uv + vq + qu; half of f(r, r) in the orthonormal frame.
constexpr double isotropy_residual_orthonormal(const Vec3Q& r) { return r.u * r.v + r.v * r.q + r.q * r.u; }

/// Eigenvalues of a symmetric 3x3 matrix in ascending order.
std::array<double, 3> symmetric_eigenvalues(const Mat3& m);

}  // namespace isowork

#endif  // ISOWORK_ALGEBRA_HPP

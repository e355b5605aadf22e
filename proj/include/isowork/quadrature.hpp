#ifndef ISOWORK_QUADRATURE_HPP
#define ISOWORK_QUADRATURE_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace isowork {

/// Points per Gauss-Legendre panel; exact for polynomials of degree <= 29.
inline constexpr int kGaussOrder = 15;
inline constexpr int kMaxDepth = 24;
inline constexpr double kDefaultTolerance = 1e-10;

struct GaussRule {
  std::array<double, kGaussOrder> nodes;    // ascending in (-1, 1)
  std::array<double, kGaussOrder> weights;  // sum to exactly 2
};

const GaussRule& gauss_legendre_rule();

/// One application of the rule on [a, b].
double gauss_panel(const std::function<double(double)>& fn, double a, double b);

struct QuadResult {
  double value = 0.0;
  /// Sum of per-panel |coarse - refined| plus a rounding term.
  double error_estimate = 0.0;
  std::size_t nodes_used = 0;
  /// Set when the depth cap stopped refinement with the estimate above tol.
  bool depth_exceeded = false;
};

/// An accepted panel of the adaptive partition.
struct Panel {
  double a;
  double b;
  double value;
  double error_estimate;
};

struct Partition {
  std::vector<Panel> panels;  // ordered left to right, covering [alpha, beta]
  QuadResult total;
};

/// Adaptive bisection of [alpha, beta] until each panel's two-half estimate
/// meets its share of `tol`. Requires alpha < beta and tol > 0 (else
/// std::invalid_argument); exceptions thrown by `fn` propagate.
Partition adaptive_partition(const std::function<double(double)>& fn, double alpha, double beta,
                             double tol = kDefaultTolerance, int max_depth = kMaxDepth);

QuadResult integrate(const std::function<double(double)>& fn, double alpha, double beta,
                     double tol = kDefaultTolerance, int max_depth = kMaxDepth);

/// n Chebyshev (first kind) points on [alpha, beta], ascending; endpoints excluded.
std::vector<double> chebyshev_points(double alpha, double beta, std::size_t n);

}  // namespace isowork

#endif  // ISOWORK_QUADRATURE_HPP

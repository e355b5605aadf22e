#include "isowork/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace isowork {

namespace {

GaussRule build_rule() {
  constexpr int n = kGaussOrder;
  GaussRule rule{};
  for (int k = 0; k < (n + 1) / 2; ++k) {
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    long double x = std::cos(std::numbers::pi_v<long double> * (k + 0.75L) / (n + 0.5L));
    long double dp = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1.0L;
      long double p1 = x;
      for (int j = 2; j <= n; ++j) {
        const long double p2 = ((2.0L * j - 1.0L) * x * p1 - (j - 1.0L) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0L);
      const long double step = p1 / dp;
      x -= step;
      if (std::fabs(step) < 1e-30L) {
        break;
      }
    }
    const long double w = 2.0L / ((1.0L - x * x) * dp * dp);
    // x is descending in k; store ascending and mirror.
    rule.nodes[n - 1 - k] = static_cast<double>(x);
    rule.nodes[k] = -static_cast<double>(x);
    rule.weights[n - 1 - k] = static_cast<double>(w);
    rule.weights[k] = static_cast<double>(w);
  }
  rule.nodes[n / 2] = 0.0;

  // Nudge the centre weight until the weights sum to exactly 2 in the
  // evaluation order used by gauss_panel, so constants integrate exactly.
  auto weight_sum = [&] {
    double s = 0.0;
    for (double w : rule.weights) {
      s += w;
    }
    return s;
  };
  for (int iter = 0; iter < 64 && weight_sum() != 2.0; ++iter) {
    const double target = weight_sum() < 2.0 ? std::numeric_limits<double>::infinity()
                                              : -std::numeric_limits<double>::infinity();
    rule.weights[n / 2] = std::nextafter(rule.weights[n / 2], target);
  }
  return rule;
}

struct PanelSums {
  double value;
  double abs_value;
};

PanelSums panel_sums(const std::function<double(double)>& fn, double a, double b) {
  const GaussRule& rule = gauss_legendre_rule();
  const double half = 0.5 * (b - a);
  const double mid = a + half;
  double sum = 0.0;
  double abs_sum = 0.0;
  for (int k = 0; k < kGaussOrder; ++k) {
    const double fx = fn(mid + half * rule.nodes[k]);
    sum += rule.weights[k] * fx;
    abs_sum += rule.weights[k] * std::abs(fx);
  }
  return {half * sum, std::abs(half) * abs_sum};
}

// Rounding contribution relative to the integral of |f|.
constexpr double kRoundingFactor = 16.0 * std::numeric_limits<double>::epsilon();

struct Refiner {
  const std::function<double(double)>& fn;
  int max_depth;
  Partition out;

  void refine(double a, double b, double whole, double tol, int depth) {
    const double mid = a + 0.5 * (b - a);
    const PanelSums left = panel_sums(fn, a, mid);
    const PanelSums right = panel_sums(fn, mid, b);
    out.total.nodes_used += 2 * kGaussOrder;
    const double refined = left.value + right.value;
    const double estimate = std::abs(whole - refined);
    const double rounding = kRoundingFactor * (left.abs_value + right.abs_value);
    if (estimate <= std::max(tol, rounding) || depth >= max_depth) {
      if (estimate > tol && estimate > rounding) {
        out.total.depth_exceeded = true;
      }
      out.panels.push_back({a, b, refined, estimate + rounding});
      return;
    }
    refine(a, mid, left.value, 0.5 * tol, depth + 1);
    refine(mid, b, right.value, 0.5 * tol, depth + 1);
  }
};

}  // namespace

const GaussRule& gauss_legendre_rule() {
  static const GaussRule rule = build_rule();
  return rule;
}

double gauss_panel(const std::function<double(double)>& fn, double a, double b) { return panel_sums(fn, a, b).value; }

Partition adaptive_partition(const std::function<double(double)>& fn, double alpha, double beta, double tol,
                             int max_depth) {
  if (!(alpha < beta)) {
    throw std::invalid_argument("integration interval requires alpha < beta");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("integration tolerance must be positive");
  }
  Refiner refiner{fn, max_depth, {}};
  const PanelSums whole = panel_sums(fn, alpha, beta);
  refiner.out.total.nodes_used = kGaussOrder;
  refiner.refine(alpha, beta, whole.value, tol, 0);
  for (const Panel& p : refiner.out.panels) {
    refiner.out.total.value += p.value;
    refiner.out.total.error_estimate += p.error_estimate;
  }
  return std::move(refiner.out);
}

QuadResult integrate(const std::function<double(double)>& fn, double alpha, double beta, double tol,
                     int max_depth) {
  return adaptive_partition(fn, alpha, beta, tol, max_depth).total;
}

std::vector<double> chebyshev_points(double alpha, double beta, std::size_t n) {
  std::vector<double> pts(n);
  const double mid = 0.5 * (alpha + beta);
  const double half = 0.5 * (beta - alpha);
  for (std::size_t k = 0; k < n; ++k) {
    pts[k] = mid - half * std::cos(std::numbers::pi * (2.0 * k + 1.0) / (2.0 * n));
  }
  return pts;
}

}  // namespace isowork

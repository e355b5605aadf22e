#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "isowork/errors.hpp"
#include "isowork/quadrature.hpp"

using namespace isowork;

TEST(GaussRule, NodesSymmetricAndWeightsSumToTwo) {
  const GaussRule& rule = gauss_legendre_rule();
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    EXPECT_GT(rule.weights[i], 0.0);
    EXPECT_NEAR(rule.nodes[i], -rule.nodes[rule.nodes.size() - 1 - i], 1e-16);
    sum += rule.weights[i];
  }
  EXPECT_EQ(sum, 2.0);
  EXPECT_EQ(rule.nodes[kGaussOrder / 2], 0.0);
}

TEST(GaussPanel, ExactForMonomialsUpToDegree29) {
  for (int d = 0; d <= 29; ++d) {
    const double got = gauss_panel([d](double t) { return std::pow(t, d); }, 0.0, 1.0);
    EXPECT_NEAR(got, 1.0 / (d + 1), 1e-15) << "degree " << d;
  }
  // Degree 30 is the first the rule misses.
  EXPECT_GT(std::abs(gauss_panel([](double t) { return std::pow(t, 30); }, -1.0, 1.0) - 2.0 / 31.0), 1e-15);
}

TEST(Integrate, Examples) {
  const QuadResult lin = integrate([](double t) { return t; }, 0.0, 1.0, 1e-12);
  EXPECT_NEAR(lin.value, 0.5, 1e-15);
  const QuadResult c = integrate([](double t) { return std::cos(t); }, 0.0, std::numbers::pi / 2.0, 1e-12);
  EXPECT_NEAR(c.value, 1.0, 1e-12);
  EXPECT_FALSE(c.depth_exceeded);
  const QuadResult one = integrate([](double) { return 1.0; }, -0.3, 2.7);
  EXPECT_EQ(one.value, 2.7 - -0.3);
}

TEST(Integrate, ErrorEstimateCoversTrueError) {
  const QuadResult r = integrate([](double t) { return std::exp(-t) * std::sin(7.0 * t); }, 0.0, 4.0, 1e-10);
  // Antiderivative of e^-t sin(7t) is -e^-t (sin 7t + 7 cos 7t) / 50.
  const auto prim = [](double t) { return -std::exp(-t) * (std::sin(7.0 * t) + 7.0 * std::cos(7.0 * t)) / 50.0; };
  const double exact = prim(4.0) - prim(0.0);
  EXPECT_LE(std::abs(r.value - exact), r.error_estimate + 1e-15);
  EXPECT_LE(r.error_estimate, 1e-10);
  EXPECT_GE(r.nodes_used, static_cast<std::size_t>(kGaussOrder));
}

TEST(Integrate, Linearity) {
  const auto f = [](double t) { return std::sqrt(1.0 + t * t); };
  const auto g = [](double t) { return std::atan(3.0 * t); };
  const QuadResult rf = integrate(f, -1.0, 2.0);
  const QuadResult rg = integrate(g, -1.0, 2.0);
  const QuadResult rc = integrate([&](double t) { return 2.5 * f(t) - 1.5 * g(t); }, -1.0, 2.0);
  const double band = 2.0 * (rf.error_estimate * 2.5 + rg.error_estimate * 1.5 + rc.error_estimate);
  EXPECT_LE(std::abs(rc.value - (2.5 * rf.value - 1.5 * rg.value)), band);
}

TEST(Integrate, IntervalAdditivity) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(0.0, 1.0);
  const auto f = [](double t) { return std::exp(std::sin(3.0 * t)) / (2.0 + std::cos(t)); };
  for (int i = 0; i < 20; ++i) {
    const double a = -2.0 * d(rng);
    const double b = 2.0 * d(rng) + 0.1;
    const double m = a + (b - a) * d(rng);
    const QuadResult whole = integrate(f, a, b);
    const QuadResult left = integrate(f, a, m);
    const QuadResult right = integrate(f, m, b);
    EXPECT_LE(std::abs(whole.value - left.value - right.value),
              whole.error_estimate + left.error_estimate + right.error_estimate);
  }
}

TEST(Integrate, DepthCapFlagsResult) {
  const QuadResult r = integrate([](double t) { return std::sin(1.0 / t); }, 1e-9, 1.0, 1e-14, 4);
  EXPECT_TRUE(r.depth_exceeded);
}

TEST(Integrate, RejectsBadArguments) {
  const auto f = [](double t) { return t; };
  EXPECT_THROW(integrate(f, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(integrate(f, 0.0, 1.0, 0.0), std::invalid_argument);
}

TEST(Integrate, PropagatesDomainError) {
  EXPECT_THROW(integrate([](double) -> double { throw DomainError("bad"); }, 0.0, 1.0), DomainError);
}

TEST(AdaptivePartition, PanelsCoverInterval) {
  const Partition p = adaptive_partition([](double t) { return 1.0 / (1e-3 + t * t); }, -1.0, 1.0);
  ASSERT_FALSE(p.panels.empty());
  EXPECT_EQ(p.panels.front().a, -1.0);
  EXPECT_EQ(p.panels.back().b, 1.0);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.panels.size(); ++i) {
    if (i > 0) {
      EXPECT_EQ(p.panels[i].a, p.panels[i - 1].b);
    }
    sum += p.panels[i].value;
  }
  EXPECT_NEAR(sum, p.total.value, 1e-12);
  EXPECT_NEAR(p.total.value, 2.0 * std::atan(1.0 / std::sqrt(1e-3)) / std::sqrt(1e-3), 1e-9);
}

TEST(Chebyshev, AscendingInsideInterval) {
  const auto pts = chebyshev_points(2.0, 5.0, 64);
  ASSERT_EQ(pts.size(), 64u);
  EXPECT_GT(pts.front(), 2.0);
  EXPECT_LT(pts.back(), 5.0);
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
}

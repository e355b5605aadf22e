#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "isowork/verify.hpp"

using namespace isowork;

namespace {

const CheckResult* find(const VerifyReport& report, const std::string& name) {
  const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                               [&](const CheckResult& c) { return c.name == name; });
  return it == report.checks.end() ? nullptr : &*it;
}

}  // namespace

TEST(Verify, CleanBuildPasses) {
  const VerifyReport report = run_verify();
  for (const CheckResult& c : report.checks) {
    EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  }
  EXPECT_TRUE(report.all_passed());
  EXPECT_GE(report.checks.size(), 29u);
  EXPECT_LT(report.seconds, 15.0);
}

TEST(Verify, OtherSeedsPass) {
  for (std::uint64_t seed : {1u, 2u}) {
    VerifyOptions options;
    options.seed = seed;
    const VerifyReport report = run_verify(options);
    for (const CheckResult& c : report.checks) {
      EXPECT_TRUE(c.passed) << "seed " << seed << " " << c.name << ": " << c.detail;
    }
  }
}

TEST(Verify, MutatedDiscriminantIsCaught) {
  VerifyOptions options;
  options.plane_builder = [](double phi) {
    PlaneContext ctx = build_plane(phi);
    // (1 + c)(1 + 2c) in place of (1 + c)(1 + 3c).
    ctx.discriminant = (1.0 + ctx.c) * (1.0 + 2.0 * ctx.c);
    return ctx;
  };
  const VerifyReport report = run_verify(options);
  EXPECT_FALSE(report.all_passed());
  const CheckResult* c = find(report, "plane2.discriminant_identity");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  EXPECT_NE(c->detail.find("discriminant"), std::string::npos);
}

TEST(Verify, MutatedCrossCoefficientIsCaught) {
  VerifyOptions options;
  options.plane_builder = [](double phi) {
    PlaneContext ctx = build_plane(phi);
    ctx.f_ij *= 1.0 + 1e-9;
    return ctx;
  };
  const VerifyReport report = run_verify(options);
  const CheckResult* c = find(report, "plane2.f_entries");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
}

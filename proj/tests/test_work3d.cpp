#include <gtest/gtest.h>

#include <cmath>

#include "isowork/errors.hpp"
#include "isowork/generators.hpp"
#include "isowork/work3d.hpp"

using namespace isowork;

namespace {

ForceField field(const char* p, const char* r, const char* s) { return {parse(p), parse(r), parse(s)}; }

ParamCurve curve(const char* x, const char* y, const char* z, double alpha = 0.0, double beta = 1.0) {
  return {parse(x), parse(y), parse(z), alpha, beta};
}

// Reverses the parameter: t -> alpha + beta - t.
ParamCurve reversed(const ParamCurve& c) {
  const Expr flip = Expr::number(c.alpha() + c.beta()) - Expr::variable(Var::T);
  return {c.x().substitute(Var::T, flip), c.y().substitute(Var::T, flip), c.z().substitute(Var::T, flip), c.alpha(),
          c.beta()};
}

}  // namespace

TEST(WorkDirect, Examples) {
  EXPECT_NEAR(work_direct(field("1", "1", "-1/2"), curve("t", "2*t", "-2*t/3")).value, 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(work_direct(field("1", "1", "-1/2"), curve("t", "t", "-t/2")).value, 0.0, 1e-15);
  EXPECT_EQ(work_direct(field("0", "0", "0"), curve("sin(t)", "t^2", "exp(t)")).value, 0.0);
  EXPECT_EQ(work_direct(field("1", "1", "-1/2"), curve("t", "t", "-t/2")).method, WorkMethod::DirectQuadrature);
}

TEST(ClassifyCase, Examples) {
  EXPECT_EQ(classify_case(field("1", "1", "-1/2"), curve("t", "t", "-t/2")).tag, WorkMethod::CaseI_Collinear);
  EXPECT_EQ(classify_case(field("z", "0", "0"), curve("3", "4", "t")).tag, WorkMethod::CaseII_DxDyZero);
  EXPECT_EQ(classify_case(field("0", "0", "x+y"), curve("t", "0", "5")).tag, WorkMethod::CaseIII_PRZero);
  EXPECT_EQ(classify_case(field("1", "1", "-1/2"), curve("t", "2*t", "-2*t/3")).tag, WorkMethod::CaseIV_General);
}

TEST(ClassifyCase, RejectsNonIsotropicData) {
  try {
    classify_case(field("1", "1", "1"), curve("t", "2*t", "-2*t/3"));
    FAIL() << "expected NotIsotropic";
  } catch (const NotIsotropic& e) {
    // uv + vq + qu = 3, relative to |F|^2 = 3.
    EXPECT_NEAR(e.force_residual(), 1.0, 1e-12);
    EXPECT_NEAR(e.curve_residual(), 0.0, 1e-15);
  }
  EXPECT_THROW(classify_case(field("1", "1", "-1/2"), curve("t", "t", "t")), NotIsotropic);
  const CaseDiagnostics d = diagnose(field("1", "1", "1"), curve("t", "t", "t"));
  EXPECT_FALSE(d.isotropic);
}

TEST(WorkCaseII, Examples) {
  const WorkResult a = work_case_ii(field("z", "0", "0"), curve("0", "0", "t"));
  EXPECT_NEAR(a.value, 0.5, 1e-15);
  EXPECT_EQ(a.method, WorkMethod::CaseII_DxDyZero);
  EXPECT_NEAR(work_case_ii(field("1", "1", "-1/2"), curve("3", "4", "t", 0.0, 2.0)).value, 4.0, 1e-14);
  // An S-only field along a vertical curve is parallel to it, so case I claims it before II and III.
  const WorkResult overlap = work(field("0", "0", "x+1"), curve("3", "4", "t"));
  EXPECT_EQ(overlap.method, WorkMethod::CaseI_Collinear);
  EXPECT_EQ(overlap.value, 0.0);
}

TEST(WorkCaseIII, Examples) {
  EXPECT_NEAR(work_case_iii(field("0", "0", "1"), curve("t", "0", "5")).value, 1.0, 1e-15);
  EXPECT_NEAR(work_case_iii(field("0", "0", "x+y"), curve("t", "0", "5")).value, 0.5, 1e-15);
  EXPECT_EQ(work_case_iii(field("0", "0", "1"), curve("0", "0", "t")).value, 0.0);
  EXPECT_EQ(work(field("0", "0", "1"), curve("0", "0", "t")).value, 0.0);
}

TEST(WorkCaseIV, Examples) {
  EXPECT_NEAR(work_case_iv(field("1", "1", "-1/2"), curve("t", "2*t", "-2*t/3")).value, 1.0 / 6.0, 1e-15);
  EXPECT_EQ(work_case_iv(field("1", "1", "-1/2"), curve("t", "t", "-t/2")).value, 0.0);
  EXPECT_NEAR(work_case_iv(field("2", "1", "-2/3"), curve("t", "2*t", "-2*t/3")).value, 1.0, 1e-14);
  EXPECT_NEAR(work_direct(field("2", "1", "-2/3"), curve("t", "2*t", "-2*t/3")).value, 1.0, 1e-14);
}

TEST(WorkCaseIV, FallsBackWhenDenominatorVanishes) {
  // P + R = 2x - 1 is exactly zero at the centre node of [0, 1]; the direct
  // integrand R x' = 2t - 2 is harmless there.
  const WorkResult r = work_case_iv(field("1", "2*x - 2", "0"), curve("t", "0", "0"));
  EXPECT_TRUE(r.fell_back_to_direct);
  EXPECT_NEAR(r.value, -1.0, 1e-15);
}

TEST(Work, Examples) {
  const WorkResult collinear = work(field("1", "1", "-1/2"), curve("t", "t", "-t/2"));
  EXPECT_EQ(collinear.value, 0.0);
  EXPECT_EQ(collinear.method, WorkMethod::CaseI_Collinear);

  const WorkResult general = work(field("1", "1", "-1/2"), curve("t", "2*t", "-2*t/3"));
  EXPECT_NEAR(general.value, 1.0 / 6.0, 1e-10);
  EXPECT_EQ(general.method, WorkMethod::CaseIV_General);

  const WorkResult s_only = work(field("0", "0", "1"), curve("t", "0", "5"));
  EXPECT_NEAR(s_only.value, 1.0, 1e-15);
  EXPECT_EQ(s_only.method, WorkMethod::CaseIII_PRZero);
}

TEST(Work, CrossCheckFailureWhenSamplingMissesNonIsotropy) {
  // S = -1/2 + T64(x) is isotropic exactly at the 64 Chebyshev samples of
  // [-1, 1] only; the case formula ignores S, the direct integral does not.
  const char* s = "-1/2 + (2*(2*(2*(2*(2*(2*x^2-1)^2-1)^2-1)^2-1)^2-1)^2-1)";
  const ForceField f = field("1", "1", s);
  const ParamCurve c = curve("t", "2*t", "-2*t/3", -1.0, 1.0);
  EXPECT_NEAR(work_case_iv(f, c).value, 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(work_direct(f, c).value, 1.0 / 3.0 - 6.0 / 4095.0, 1e-12);
  EXPECT_THROW(work(f, c), CrossCheckFailure);
}

TEST(Work, CollinearPairsGiveZero) {
  gen::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const gen::CollinearPair pair = gen::collinear_pair(rng);
    const WorkResult w = work(pair.force, pair.curve);
    ASSERT_EQ(w.method, WorkMethod::CaseI_Collinear);
    EXPECT_EQ(w.value, 0.0);
    const WorkResult direct = work_direct(pair.force, pair.curve);
    EXPECT_LE(std::abs(direct.value), 1e-9 + direct.error_estimate);
  }
}

TEST(Work, RandomCasesAgreeWithDirect) {
  gen::Rng rng(32);
  for (int i = 0; i < 40; ++i) {
    const gen::CompletedPair iv = gen::case_iv_pair(rng);
    const WorkResult w = work(iv.force, iv.curve);
    EXPECT_EQ(w.method, WorkMethod::CaseIV_General);
    const WorkResult direct = work_direct(iv.force, iv.curve);
    EXPECT_LE(std::abs(w.value - direct.value), kCrossCheckFactor * (w.error_estimate + direct.error_estimate));

    const gen::ParamPair ii = gen::case_ii_pair(rng);
    EXPECT_EQ(work(ii.force, ii.curve).method, WorkMethod::CaseII_DxDyZero);

    const gen::CompletedPair iii = gen::case_iii_pair(rng);
    EXPECT_EQ(work(iii.force, iii.curve).method, WorkMethod::CaseIII_PRZero);
  }
}

TEST(Work, LinearInForce) {
  gen::Rng rng(33);
  for (int i = 0; i < 10; ++i) {
    const gen::CompletedPair pair = gen::case_iv_pair(rng);
    const Expr a = Expr::number(2.5);
    const ForceField scaled(a * pair.force.p(), a * pair.force.r(), a * pair.force.s());
    const WorkResult base = work(pair.force, pair.curve);
    const WorkResult big = work(scaled, pair.curve);
    EXPECT_NEAR(big.value, 2.5 * base.value, 10.0 * (big.error_estimate + 2.5 * base.error_estimate) + 1e-13);
  }
}

TEST(Work, ReversalNegates) {
  const ForceField f = field("1 + x^2", "2 + sin(y)", "-(1 + x^2)*(2 + sin(y))/(3 + x^2 + sin(y))");
  const ParamCurve c = curve("0", "0", "t^2 + t", 0.2, 1.3);
  const WorkResult fwd = work(f, c);
  const WorkResult back = work(f, reversed(c));
  EXPECT_NEAR(back.value, -fwd.value, 1e-12);

  const ForceField g = field("1", "1", "-1/2");
  const ParamCurve d = curve("t", "2*t", "-2*t/3", -0.5, 2.0);
  EXPECT_NEAR(work(g, reversed(d)).value, -work(g, d).value, 1e-12);
}

TEST(Work, CompletionsNeverNotIsotropic) {
  gen::Rng rng(34);
  for (int i = 0; i < 30; ++i) {
    const gen::CompletedPair pair = gen::case_iv_pair(rng);
    const CaseDiagnostics d = diagnose(pair.force, pair.curve);
    EXPECT_TRUE(d.isotropic);
    EXPECT_TRUE(d.tag == WorkMethod::CaseIV_General || d.tag == WorkMethod::CaseI_Collinear);
  }
}

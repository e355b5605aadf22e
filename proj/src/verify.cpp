#include "isowork/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <numbers>
#include <sstream>

#include "isowork/algebra.hpp"
#include "isowork/errors.hpp"
#include "isowork/expr.hpp"
#include "isowork/generators.hpp"
#include "isowork/quadrature.hpp"
#include "isowork/scenario.hpp"
#include "isowork/work3d.hpp"

namespace isowork {

namespace {

using gen::Rng;

constexpr double kTwoThirdsPi = 2.0 * std::numbers::pi / 3.0;
const double kDoubleRootAngle = std::acos(-1.0 / 3.0);

// A failed check reports through this exception; anything else escaping a
// check is also a failure.
struct CheckFailed {
  std::string detail;
};

template <class... Parts>
[[noreturn]] void fail(const Parts&... parts) {
  std::ostringstream os;
  os.precision(17);
  (os << ... << parts);
  throw CheckFailed{os.str()};
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Vec3Q random_vec(Rng& rng, double scale) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

double l1(const Vec3Q& a) { return std::abs(a.u) + std::abs(a.v) + std::abs(a.q); }

// Angles in (0, 2pi/3), open interval.
std::vector<double> frame_angles(std::size_t n) {
  std::vector<double> out;
  for (std::size_t k = 1; k <= n; ++k) {
    out.push_back(kTwoThirdsPi * static_cast<double>(k) / static_cast<double>(n + 1));
  }
  return out;
}

// Angles in (0, 2pi/3], right endpoint included.
std::vector<double> plane_angles(std::size_t n) {
  std::vector<double> out;
  for (std::size_t k = 1; k <= n; ++k) {
    out.push_back(kTwoThirdsPi * static_cast<double>(k) / static_cast<double>(n));
  }
  return out;
}

// Case-C angles kept 0.01 rad away from 0, pi/2 and arccos(-1/3).
std::vector<double> case_c_angles(std::size_t n) {
  const double margin = 0.01;
  const double left = std::numbers::pi / 2.0 - 2.0 * margin;
  const double right = kDoubleRootAngle - std::numbers::pi / 2.0 - 2.0 * margin;
  std::vector<double> out;
  for (std::size_t k = 0; k < n; ++k) {
    const double s = (static_cast<double>(k) + 0.5) / static_cast<double>(n) * (left + right);
    out.push_back(s < left ? margin + s : std::numbers::pi / 2.0 + margin + (s - left));
  }
  return out;
}

// --- algebra ---------------------------------------------------------------

void check_q_cube(Rng& rng) {
  for (int n = 0; n < 1000; ++n) {
    const Vec3Q r = random_vec(rng, 1e3);
    if (!(apply_q(apply_q(apply_q(r))) == r)) {
      fail("Q^3 r != r for r = (", r.u, ", ", r.v, ", ", r.q, ")");
    }
  }
}

void check_g_isometry(Rng& rng) {
  for (double phi : frame_angles(50)) {
    const QFrame frame = QFrame::from_angle(phi);
    for (int n = 0; n < 100; ++n) {
      const Vec3Q r = random_vec(rng, 10.0);
      const Vec3Q w = random_vec(rng, 10.0);
      const double diff = std::abs(g_inner(frame, apply_q(r), apply_q(w)) - g_inner(frame, r, w));
      if (diff > 1e-14 * l1(r) * l1(w)) {
        fail("g(Qr, Qw) != g(r, w) at phi = ", phi, ", diff ", diff);
      }
    }
  }
}

void check_f_structure(Rng& rng) {
  for (double phi : frame_angles(50)) {
    const QFrame frame = QFrame::from_angle(phi);
    for (int n = 0; n < 100; ++n) {
      const Vec3Q r = random_vec(rng, 10.0);
      const Vec3Q w = random_vec(rng, 10.0);
      const double f_rw = f_inner(frame, r, w);
      if (f_rw != f_inner(frame, w, r)) {
        fail("f not exactly symmetric at phi = ", phi);
      }
      const double scale = 2.0 * l1(r) * l1(w);
      if (std::abs(f_inner(frame, apply_q(r), apply_q(w)) - f_rw) > 1e-14 * scale) {
        fail("f(Qr, Qw) != f(r, w) at phi = ", phi);
      }
      const double expanded = g_inner(frame, r, apply_q(w)) + g_inner(frame, apply_q(r), w);
      if (std::abs(expanded - f_rw) > 1e-14 * scale) {
        fail("f(r, w) != g(r, Qw) + g(Qr, w) at phi = ", phi);
      }
    }
  }
}

void check_orthonormal_lemma(Rng& rng) {
  const QFrame frame = QFrame::orthonormal();
  const Mat3& m = frame.mat_f();
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (m[a][b] != (a == b ? 0.0 : 1.0)) {
        fail("orthonormal f matrix entry [", a, "][", b, "] = ", m[a][b]);
      }
    }
  }
  for (int n = 0; n < 100; ++n) {
    const Vec3Q r = random_vec(rng, 10.0);
    const double lhs = f_inner(frame, r, r);
    const double rhs = 2.0 * isotropy_residual_orthonormal(r);
    if (std::abs(lhs - rhs) > 1e-14 * l1(r) * l1(r)) {
      fail("f(r, r) != 2(uv + vq + qu), diff ", std::abs(lhs - rhs));
    }
  }
}

void check_f_indefinite(Rng&) {
  for (double phi : frame_angles(200)) {
    const auto eig = symmetric_eigenvalues(QFrame::from_angle(phi).mat_f());
    if (!(eig[0] < 0.0 && eig[2] > 0.0)) {
      fail("f is not indefinite at phi = ", phi, " (eigenvalues ", eig[0], ", ", eig[1], ", ", eig[2], ")");
    }
  }
}

void check_g_positive(Rng&) {
  for (double phi : frame_angles(200)) {
    const QFrame frame = QFrame::from_angle(phi);
    const auto eig = symmetric_eigenvalues(frame.gram_g());
    if (!(eig[0] > 0.0)) {
      fail("g is not positive definite at phi = ", phi, " (smallest eigenvalue ", eig[0], ")");
    }
    // Circulant spectrum: 1 + 2cos (once) and 1 - cos (twice).
    const double c = frame.cos_phi();
    const double expected_min = std::min(1.0 + 2.0 * c, 1.0 - c);
    if (std::abs(eig[0] - expected_min) > 1e-12) {
      fail("smallest g eigenvalue ", eig[0], " differs from circulant value ", expected_min, " at phi = ", phi);
    }
  }
}

// --- exprlang --------------------------------------------------------------

void check_round_trip(Rng& rng) {
  for (int n = 0; n < 1000; ++n) {
    const Expr e = gen::any_expr(rng, 8);
    const std::string text = pretty_print(e);
    if (!(parse(text) == e)) {
      fail("round trip changed the tree for '", text, "'");
    }
  }
}

void check_dual_vs_fd(Rng& rng) {
  constexpr double h = 1e-6;
  const VarSet all = var_bit(Var::X) | var_bit(Var::Y) | var_bit(Var::Z) | var_bit(Var::T);
  int tested = 0;
  while (tested < 500) {
    const Expr e = gen::smooth_expr(rng, 4, all);
    const std::array<double, 4> base{uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2),
                                     uniform(rng, -2, 2)};
    const std::array<double, 4> rate{uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1), 1.0};
    Env<DualValue> denv;
    for (int k = 0; k < 4; ++k) {
      denv.bind(static_cast<Var>(k), DualValue{base[k], rate[k]});
    }
    auto shifted = [&](double s) {
      Env<double> env;
      for (int k = 0; k < 4; ++k) {
        env.bind(static_cast<Var>(k), base[k] + s * rate[k]);
      }
      return eval(e, env);
    };
    const DualValue ad = eval_dual(e, denv);
    if (std::abs(ad.value) > 1e3) {
      continue;  // finite differences lose too many digits on huge values
    }
    const double fd = (shifted(h) - shifted(-h)) / (2.0 * h);
    if (std::abs(ad.deriv - fd) > 1e-6 * std::max(1.0, std::abs(ad.deriv))) {
      fail("dual derivative ", ad.deriv, " vs finite difference ", fd, " for ", pretty_print(e));
    }
    ++tested;
  }
}

void check_determinism(Rng& rng) {
  for (int n = 0; n < 200; ++n) {
    const std::string text = pretty_print(gen::smooth_expr(rng, 5, var_bit(Var::T) | var_bit(Var::X)));
    const Env<double> env{{Var::T, uniform(rng, -2, 2)}, {Var::X, uniform(rng, -2, 2)}};
    const double a = eval(parse(text), env);
    const double b = eval(parse(text), env);
    if (std::memcmp(&a, &b, sizeof a) != 0) {
      fail("evaluation of '", text, "' is not bit-identical");
    }
  }
}

// --- quadrature ------------------------------------------------------------

void check_polynomial_exactness(Rng& rng) {
  for (int k = 0; k <= 2 * kGaussOrder - 1; ++k) {
    const double got = gauss_panel([k](double t) { return std::pow(t, k); }, 0.0, 1.0);
    const double expected = 1.0 / (k + 1.0);
    if (std::abs(got - expected) > 1e-15) {
      fail("t^", k, " on [0,1]: ", got, " vs ", expected);
    }
  }
  for (int n = 0; n < 50; ++n) {
    // Coefficients with sum of magnitudes <= 1; exact integral in long double.
    std::array<double, 30> coeff{};
    double total = 0.0;
    for (double& c : coeff) {
      c = uniform(rng, -1.0, 1.0);
      total += std::abs(c);
    }
    long double exact = 0.0L;
    for (std::size_t k = 0; k < coeff.size(); ++k) {
      coeff[k] /= total;
      exact += static_cast<long double>(coeff[k]) / static_cast<long double>(k + 1);
    }
    const double got = gauss_panel(
        [&](double t) {
          double acc = 0.0;
          for (std::size_t k = coeff.size(); k-- > 0;) {
            acc = acc * t + coeff[k];
          }
          return acc;
        },
        0.0, 1.0);
    if (std::abs(got - static_cast<double>(exact)) > 1e-15) {
      fail("degree-29 polynomial: ", got, " vs ", static_cast<double>(exact));
    }
  }
}

double eval_t(const Expr& e, double t) { return eval(e, Env<double>{{Var::T, t}}); }

void check_quadrature_linearity(Rng& rng) {
  for (int n = 0; n < 50; ++n) {
    const Expr f = gen::smooth_expr(rng, 4, var_bit(Var::T));
    const Expr g = gen::smooth_expr(rng, 4, var_bit(Var::T));
    const double a = uniform(rng, -3, 3);
    const double b = uniform(rng, -3, 3);
    const double lo = uniform(rng, -2, 0);
    const double hi = lo + uniform(rng, 0.5, 3);
    const QuadResult qf = integrate([&](double t) { return eval_t(f, t); }, lo, hi);
    const QuadResult qg = integrate([&](double t) { return eval_t(g, t); }, lo, hi);
    const QuadResult qh = integrate([&](double t) { return a * eval_t(f, t) + b * eval_t(g, t); }, lo, hi);
    const double diff = std::abs(qh.value - (a * qf.value + b * qg.value));
    const double allowed = 2.0 * (std::abs(a) * qf.error_estimate + std::abs(b) * qg.error_estimate + qh.error_estimate);
    if (diff > allowed) {
      fail("linearity violated by ", diff, " (allowed ", allowed, ")");
    }
  }
}

void check_quadrature_additivity(Rng& rng) {
  for (int n = 0; n < 50; ++n) {
    const Expr f = gen::smooth_expr(rng, 4, var_bit(Var::T));
    const double lo = uniform(rng, -2, 0);
    const double hi = lo + uniform(rng, 0.5, 3);
    const double mid = lo + uniform(rng, 0.1, 0.9) * (hi - lo);
    auto fn = [&](double t) { return eval_t(f, t); };
    const QuadResult whole = integrate(fn, lo, hi);
    const QuadResult left = integrate(fn, lo, mid);
    const QuadResult right = integrate(fn, mid, hi);
    const double diff = std::abs(whole.value - left.value - right.value);
    const double allowed = whole.error_estimate + left.error_estimate + right.error_estimate;
    if (diff > allowed) {
      fail("additivity violated by ", diff, " (allowed ", allowed, ")");
    }
  }
}

// --- fields_curves ---------------------------------------------------------

void check_curve_completion(Rng& rng) {
  const GaussRule& rule = gauss_legendre_rule();
  for (int n = 0; n < 20; ++n) {
    const gen::CompletedPair pair = gen::case_iv_pair(rng);
    const CompletedCurve& c = pair.curve;
    const std::vector<double> knots = c.grid();
    std::vector<double> nodes = knots;
    for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
      const double half = 0.5 * (knots[k + 1] - knots[k]);
      for (double x : rule.nodes) {
        nodes.push_back(knots[k] + half + half * x);
      }
    }
    for (double t : nodes) {
      const Vec3Q d = c.sample(t).tangent;
      const double residual = std::abs(curve_isotropy_residual(c, t));
      if (residual > 1e-10 * std::max(1.0, coord_dot(d, d))) {
        fail("completed curve isotropy residual ", residual, " at t = ", t);
      }
    }
  }
}

void check_force_completion(Rng& rng) {
  const VarSet space = var_bit(Var::X) | var_bit(Var::Y) | var_bit(Var::Z);
  int tested = 0;
  while (tested < 100) {
    const ForceField f =
        complete_isotropic_force(gen::smooth_expr(rng, 3, space), gen::smooth_expr(rng, 3, space) - Expr::number(1.0));
    const Vec3Q pt = random_vec(rng, 2.0);
    const Env<double> env{{Var::X, pt.u}, {Var::Y, pt.v}, {Var::Z, pt.q}};
    const double p = eval(f.p(), env);
    const double r = eval(f.r(), env);
    if (std::abs(p + r) <= 0.1) {
      continue;
    }
    const Vec3Q v = f.at(pt);
    const double scale = std::max(1.0, std::abs(v.u * v.v) + std::abs(v.v * v.q) + std::abs(v.q * v.u));
    const double residual = std::abs(force_isotropy_residual(f, pt));
    if (residual > 1e-12 * scale) {
      fail("completed force residual ", residual, " at (", pt.u, ", ", pt.v, ", ", pt.q, ")");
    }
    ++tested;
  }
}

ForceField scaled(const ForceField& f, double a) {
  const Expr k = Expr::number(a);
  return ForceField(k * f.p(), k * f.r(), k * f.s());
}

void check_collinearity_scaling(Rng& rng) {
  for (int n = 0; n < 40; ++n) {
    const double a = uniform(rng, 0.1, 10.0);
    const gen::CollinearPair col = gen::collinear_pair(rng);
    const gen::ParamPair other = gen::case_ii_pair(rng);
    for (const auto& [force, curve] :
         {std::pair<const ForceField&, const Curve&>{col.force, col.curve}, {other.force, other.curve}}) {
      const bool before = collinearity_check(force, curve, kSampleCount).collinear;
      const bool after = collinearity_check(scaled(force, a), curve, kSampleCount).collinear;
      if (before != after) {
        fail("collinearity verdict changed under scaling by ", a);
      }
    }
  }
}

void expect_tag(const ForceField& f, const Curve& c, WorkMethod expected, const char* what) {
  const CaseDiagnostics d = classify_case(f, c);
  if (d.tag != expected) {
    fail(what, " classified as ", to_string(d.tag), ", expected ", to_string(expected));
  }
}

void check_case_exhaustive(Rng& rng) {
  for (int n = 0; n < 10; ++n) {
    const auto col = gen::collinear_pair(rng);
    expect_tag(col.force, col.curve, WorkMethod::CaseI_Collinear, "collinear pair");
    const auto ii = gen::case_ii_pair(rng);
    expect_tag(ii.force, ii.curve, WorkMethod::CaseII_DxDyZero, "constant-xy pair");
    const auto iii = gen::case_iii_pair(rng);
    expect_tag(iii.force, iii.curve, WorkMethod::CaseIII_PRZero, "P=R=0 pair");
    const auto iv = gen::case_iv_pair(rng);
    expect_tag(iv.force, iv.curve, WorkMethod::CaseIV_General, "completed pair");
  }
}

// --- work3d ----------------------------------------------------------------

double work_scale(const ForceField& f, const Curve& c) {
  return std::max(1.0, integrate(
                           [&](double t) {
                             const CurveSample s = c.sample(t);
                             return coord_norm(f.at(s.position)) * coord_norm(s.tangent);
                           },
                           c.alpha(), c.beta(), 1e-6)
                           .value);
}

void check_theorem1_collinear(Rng& rng) {
  for (int n = 0; n < 200; ++n) {
    const gen::CollinearPair pair = gen::collinear_pair(rng);
    const WorkResult w = work(pair.force, pair.curve);
    if (w.method != WorkMethod::CaseI_Collinear || w.value != 0.0) {
      fail("collinear pair gave ", to_string(w.method), " with value ", w.value);
    }
    const double direct = work_direct(pair.force, pair.curve).value;
    if (std::abs(direct) > 1e-9 * work_scale(pair.force, pair.curve)) {
      fail("direct work on a collinear pair is ", direct);
    }
  }
}

void expect_agreement(const WorkResult& a, const WorkResult& b, const char* what) {
  const double diff = std::abs(a.value - b.value);
  const double allowed = kCrossCheckFactor * (a.error_estimate + b.error_estimate);
  if (diff > allowed) {
    fail(what, ": case formula ", a.value, " vs direct ", b.value, " (allowed ", allowed, ")");
  }
}

void check_oracle_equivalence(Rng& rng) {
  for (int n = 0; n < 15; ++n) {
    const auto ii = gen::case_ii_pair(rng);
    expect_agreement(work_case_ii(ii.force, ii.curve), work_direct(ii.force, ii.curve), "case II");
    const auto iii = gen::case_iii_pair(rng);
    expect_agreement(work_case_iii(iii.force, iii.curve), work_direct(iii.force, iii.curve), "case III");
    const auto iv = gen::case_iv_pair(rng);
    expect_agreement(work_case_iv(iv.force, iv.curve), work_direct(iv.force, iv.curve), "case IV");
  }
}

void check_work_linearity(Rng& rng) {
  for (int n = 0; n < 15; ++n) {
    const auto pair = gen::case_iv_pair(rng);
    const double a = uniform(rng, 0.5, 3.0);
    const WorkResult base = work(pair.force, pair.curve);
    const WorkResult scaled_work = work(scaled(pair.force, a), pair.curve);
    const double diff = std::abs(scaled_work.value - a * base.value);
    const double allowed = kCrossCheckFactor * (scaled_work.error_estimate + a * base.error_estimate);
    if (diff > allowed) {
      fail("work(aF) != a work(F) by ", diff, " (allowed ", allowed, ")");
    }
  }
}

void check_orientation(Rng& rng) {
  for (int n = 0; n < 15; ++n) {
    const auto pair = gen::case_iv_pair(rng);
    const CompletedCurve& c = pair.curve;
    const Expr flip = Expr::number(c.alpha() + c.beta()) - Expr::variable(Var::T);
    const CompletedCurve reversed = complete_isotropic_curve(c.x().substitute(Var::T, flip), c.y().substitute(Var::T, flip),
                                                             c.sample(c.beta()).position.q, c.alpha(), c.beta());
    const WorkResult forward = work(pair.force, c);
    const WorkResult backward = work(pair.force, reversed);
    const double diff = std::abs(forward.value + backward.value);
    // Both curves carry their own integrated z, so allow the completion error too.
    const double allowed = kCrossCheckFactor * (forward.error_estimate + backward.error_estimate) +
                           1e-8 * work_scale(pair.force, c);
    if (diff > allowed) {
      fail("reversed curve work ", backward.value, " is not the negative of ", forward.value);
    }

    const auto ii = gen::case_ii_pair(rng);
    const ParamCurve& pc = ii.curve;
    const Expr pflip = Expr::number(pc.alpha() + pc.beta()) - Expr::variable(Var::T);
    const ParamCurve prev(pc.x().substitute(Var::T, pflip), pc.y().substitute(Var::T, pflip),
                          pc.z().substitute(Var::T, pflip), pc.alpha(), pc.beta());
    const WorkResult f2 = work(ii.force, pc);
    const WorkResult b2 = work(ii.force, prev);
    if (std::abs(f2.value + b2.value) > kCrossCheckFactor * (f2.error_estimate + b2.error_estimate)) {
      fail("reversed case II curve work ", b2.value, " is not the negative of ", f2.value);
    }
  }
}

void check_completion_cases(Rng& rng) {
  for (int n = 0; n < 20; ++n) {
    const auto pair = gen::case_iv_pair(rng);
    const CaseDiagnostics d = diagnose(pair.force, pair.curve);
    if (!d.isotropic) {
      fail("completed pair rejected as non-isotropic");
    }
    if (d.tag != WorkMethod::CaseIV_General && d.tag != WorkMethod::CaseI_Collinear) {
      fail("completed pair classified as ", to_string(d.tag));
    }
  }
}

// --- plane2 ----------------------------------------------------------------

void check_discriminant(const VerifyOptions& opt) {
  for (double phi : plane_angles(1000)) {
    const PlaneContext ctx = opt.plane_builder(phi);
    if (ctx.case_tag == PlaneCase::D_RightAngle) {
      continue;
    }
    const double c = ctx.c;
    const double s = ctx.s;
    const double b_sq = s * s * (1.0 + 2.0 * c) * (1.0 + 2.0 * c);
    const double ac4 = 4.0 * c * c * c * (1.0 + c);
    const double quadratic = b_sq + ac4;
    const double scale = std::max(std::abs(ctx.discriminant), std::abs(b_sq) + std::abs(ac4));
    if (std::abs(quadratic - ctx.discriminant) > 1e-12 * scale) {
      fail("discriminant identity: ", quadratic, " vs ", ctx.discriminant, " at phi = ", phi);
    }
  }
}

void check_root_residual(const VerifyOptions& opt) {
  for (double phi : plane_angles(1000)) {
    const PlaneContext ctx = opt.plane_builder(phi);
    for (const auto& k : {ctx.k1, ctx.k2}) {
      if (!k) {
        continue;
      }
      const double c = ctx.c;
      const double scale = std::max({1.0, c * c * *k * *k, std::abs(ctx.s * (1.0 + 2.0 * c) * *k)});
      if (std::abs(slope_quadratic(ctx, *k)) > 1e-12 * scale) {
        fail("slope ", *k, " leaves residual ", slope_quadratic(ctx, *k), " at phi = ", phi);
      }
    }
  }
}

void check_vieta(const VerifyOptions& opt) {
  std::vector<double> angles = case_c_angles(500);
  angles.push_back(kDoubleRootAngle);
  for (double phi : angles) {
    const PlaneContext ctx = opt.plane_builder(phi);
    if (!ctx.k1 || !ctx.k2) {
      fail("no slopes at case B/C angle ", phi);
    }
    const double c = ctx.c;
    const double sum = ctx.s * (1.0 + 2.0 * c) / (c * c);
    const double product = -(1.0 + c) / c;
    if (std::abs(*ctx.k1 + *ctx.k2 - sum) > 1e-10 * std::max(1.0, std::abs(sum))) {
      fail("k1 + k2 = ", *ctx.k1 + *ctx.k2, " vs ", sum, " at phi = ", phi);
    }
    if (std::abs(*ctx.k1 * *ctx.k2 - product) > 1e-10 * std::max(1.0, std::abs(product))) {
      fail("k1 k2 = ", *ctx.k1 * *ctx.k2, " vs ", product, " at phi = ", phi);
    }
  }
}

void check_case_c_coefficient(const VerifyOptions& opt) {
  for (double phi : case_c_angles(500)) {
    const PlaneContext ctx = opt.plane_builder(phi);
    if (ctx.case_tag != PlaneCase::C_TwoDirections) {
      fail("phi = ", phi, " should be case C");
    }
    const PlaneMetric m = plane_metric(ctx.c, ctx.s);
    const double k1 = *ctx.k1;
    const double k2 = *ctx.k2;
    // f(i + k2 j, i + k1 j)
    const double pairing = m.f_ii + (k1 + k2) * m.f_ij + k1 * k2 * m.f_jj;
    const double expected = (1.0 + 3.0 * ctx.c) / (ctx.c * ctx.c);
    if (std::abs(pairing - expected) > 1e-12 * std::abs(expected)) {
      fail("f(i + k2 j, i + k1 j) = ", pairing, " vs ", expected, " at phi = ", phi);
    }
  }
}

void check_plane_entries(const VerifyOptions& opt) {
  for (double phi : plane_angles(1000)) {
    const PlaneContext ctx = opt.plane_builder(phi);
    const PlaneMetric m = plane_metric(ctx.c, ctx.s);
    const auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); };
    if (!close(ctx.f_ii, m.f_ii) || !close(ctx.f_ij, m.f_ij) || !close(ctx.f_jj, m.f_jj)) {
      fail("plane f entries disagree with the g-product table at phi = ", phi);
    }
  }
}

void check_case_boundaries(const VerifyOptions& opt) {
  const auto expect = [&](double phi, PlaneCase expected) {
    const PlaneCase got = opt.plane_builder(phi).case_tag;
    if (got != expected) {
      fail("phi = ", phi, " tagged ", to_string(got), ", expected ", to_string(expected));
    }
  };
  expect(kDoubleRootAngle + 1e-6, PlaneCase::A_NoIsotropic);
  expect(kDoubleRootAngle, PlaneCase::B_DoubleRoot);
  expect(kDoubleRootAngle - 1e-6, PlaneCase::C_TwoDirections);
  expect(std::numbers::pi / 2.0, PlaneCase::D_RightAngle);
  expect(std::numbers::pi / 2.0 + 1e-6, PlaneCase::C_TwoDirections);
  expect(std::numbers::pi / 2.0 - 1e-6, PlaneCase::C_TwoDirections);
  expect(kTwoThirdsPi, PlaneCase::A_NoIsotropic);
}

void check_circle(const VerifyOptions& opt, Rng& rng) {
  for (int n = 0; n < 1000; ++n) {
    const double phi = uniform(rng, 1e-3, kTwoThirdsPi);
    const PlaneContext ctx = opt.plane_builder(phi);
    const PlaneMetric m = plane_metric(ctx.c, ctx.s);
    const double x = uniform(rng, -3, 3);
    const double y = uniform(rng, -3, 3);
    const double direct = m.f_ii * x * x + 2.0 * m.f_ij * x * y + m.f_jj * y * y;
    const double scale = std::abs(m.f_ii) * x * x + 2.0 * std::abs(m.f_ij * x * y) + std::abs(m.f_jj) * y * y;
    const double twice = 2.0 * circle_residual(ctx, 0.0, x, y);
    if (std::abs(twice - direct) > 1e-12 * std::max(1.0, scale)) {
      fail("2 circle_residual = ", twice, " vs f(w, w) = ", direct, " at phi = ", phi);
    }
  }
}

// --- cli -------------------------------------------------------------------

void check_scenario_round_trip(Rng& rng) {
  for (int n = 0; n < 100; ++n) {
    Scenario sc;
    sc.phi = uniform(rng, 0.1, 2.0);
    sc.p = pretty_print(gen::any_expr(rng, 4));
    sc.r = pretty_print(gen::any_expr(rng, 4));
    if (n % 2 == 0) {
      sc.s = pretty_print(gen::any_expr(rng, 4));
    }
    sc.x = pretty_print(gen::any_expr(rng, 4));
    sc.y = pretty_print(gen::any_expr(rng, 4));
    if (n % 3 == 0) {
      sc.z = pretty_print(gen::any_expr(rng, 4));
    }
    sc.alpha = uniform(rng, -5, 0);
    sc.beta = sc.alpha + uniform(rng, 0.1, 5);
    if (n % 4 == 0) {
      sc.tol = uniform(rng, 1e-12, 1e-6);
    }
    const Scenario back = scenario_from_json(nlohmann::json::parse(scenario_to_json(sc).dump()));
    if (!(back == sc)) {
      fail("scenario did not survive a JSON round trip");
    }
  }
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verify(const VerifyOptions& options) {
  using Clock = std::chrono::steady_clock;
  struct Named {
    const char* name;
    std::function<void(Rng&)> run;
  };
  const VerifyOptions& opt = options;
  const std::vector<Named> checks = {
      {"algebra.q_cube_identity", check_q_cube},
      {"algebra.g_q_isometry", check_g_isometry},
      {"algebra.f_symmetry_and_q_invariance", check_f_structure},
      {"algebra.f_orthonormal_lemma", check_orthonormal_lemma},
      {"algebra.f_indefinite", check_f_indefinite},
      {"algebra.g_positive_definite", check_g_positive},
      {"exprlang.round_trip", check_round_trip},
      {"exprlang.dual_vs_finite_difference", check_dual_vs_fd},
      {"exprlang.determinism", check_determinism},
      {"quadrature.polynomial_exactness", check_polynomial_exactness},
      {"quadrature.linearity", check_quadrature_linearity},
      {"quadrature.interval_additivity", check_quadrature_additivity},
      {"fields_curves.curve_completion_isotropic", check_curve_completion},
      {"fields_curves.force_completion_isotropic", check_force_completion},
      {"fields_curves.collinearity_scale_invariance", check_collinearity_scaling},
      {"fields_curves.case_conditions_exhaustive", check_case_exhaustive},
      {"work3d.theorem1_collinear_zero", check_theorem1_collinear},
      {"work3d.oracle_equivalence", check_oracle_equivalence},
      {"work3d.linearity_in_force", check_work_linearity},
      {"work3d.orientation_reversal", check_orientation},
      {"work3d.completions_case_iv_or_i", check_completion_cases},
      {"plane2.discriminant_identity", [&](Rng&) { check_discriminant(opt); }},
      {"plane2.root_residual", [&](Rng&) { check_root_residual(opt); }},
      {"plane2.vieta", [&](Rng&) { check_vieta(opt); }},
      {"plane2.case_c_coefficient", [&](Rng&) { check_case_c_coefficient(opt); }},
      {"plane2.f_entries", [&](Rng&) { check_plane_entries(opt); }},
      {"plane2.case_boundaries", [&](Rng&) { check_case_boundaries(opt); }},
      {"plane2.circle_consistency", [&](Rng& rng) { check_circle(opt, rng); }},
      {"cli.scenario_round_trip", check_scenario_round_trip},
  };

  VerifyReport report;
  const auto suite_start = Clock::now();
  std::uint64_t salt = 0;
  for (const Named& check : checks) {
    Rng rng(options.seed + 0x9E3779B97F4A7C15ULL * ++salt);
    CheckResult result;
    result.name = check.name;
    const auto start = Clock::now();
    try {
      check.run(rng);
      result.passed = true;
    } catch (const CheckFailed& f) {
      result.detail = f.detail;
    } catch (const std::exception& e) {
      result.detail = std::string("unexpected error: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    report.checks.push_back(std::move(result));
  }
  report.seconds = std::chrono::duration<double>(Clock::now() - suite_start).count();
  return report;
}

}  // namespace isowork

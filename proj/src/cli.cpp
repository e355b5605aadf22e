#include "isowork/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "isowork/errors.hpp"
#include "isowork/plane2.hpp"
#include "isowork/scenario.hpp"
#include "isowork/verify.hpp"
#include "isowork/work3d.hpp"

namespace isowork {

namespace {

using nlohmann::json;

// Work and other reported values carry 12 significant digits in text mode.
std::string fmt(double v) {
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g", v);
  return buf.data();
}

json envelope(const char* command, json inputs, json results) {
  return {{"schema_version", kJsonSchemaVersion},
          {"command", command},
          {"inputs_echo", std::move(inputs)},
          {"results", std::move(results)}};
}

// The work command needs the orthonormal frame; only classification of
// vectors makes sense for other angles.
constexpr double kOrthonormalAngleTolerance = 1e-12;

bool is_orthonormal_angle(double phi) { return std::abs(phi - std::numbers::pi / 2.0) <= kOrthonormalAngleTolerance; }

struct ScenarioArgs {
  std::string path;
  std::optional<double> tol;
  std::optional<double> alpha;
  std::optional<double> beta;
  bool json = false;
};

void add_scenario_args(CLI::App* cmd, ScenarioArgs& args) {
  cmd->add_option("file", args.path, "Scenario JSON file")->required();
  cmd->add_option("--tol", args.tol, "Quadrature tolerance (overrides file and ISOWORK_TOL)");
  cmd->add_option("--alpha", args.alpha, "Override curve.alpha");
  cmd->add_option("--beta", args.beta, "Override curve.beta");
  cmd->add_flag("--json", args.json, "Emit a JSON report");
}

// Flags override file fields; the echoed scenario carries the tolerance in
// effect so that it re-parses to the same run.
Scenario load_with_overrides(const ScenarioArgs& args) {
  Scenario sc = load_scenario(args.path);
  if (args.alpha) {
    sc.alpha = *args.alpha;
  }
  if (args.beta) {
    sc.beta = *args.beta;
  }
  if (!(sc.alpha < sc.beta) || !std::isfinite(sc.alpha) || !std::isfinite(sc.beta)) {
    throw ScenarioError("curve.beta", "must exceed curve.alpha");
  }
  if (args.tol) {
    if (!(*args.tol > 0.0) || !std::isfinite(*args.tol)) {
      throw ScenarioError("tol", "must be a positive number");
    }
    sc.tol = *args.tol;
  }
  if (!sc.tol) {
    sc.tol = default_tolerance();
  }
  return sc;
}

json vec_json(const Vec3Q& v) { return json::array({v.u, v.v, v.q}); }

int cmd_classify(const ScenarioArgs& args, std::ostream& out) {
  const Scenario sc = load_with_overrides(args);
  QFrame frame = QFrame::orthonormal();
  try {
    frame = QFrame::from_angle(sc.phi);
  } catch (const OutOfRange& e) {
    throw ScenarioError("frame.phi", e.what());
  }
  const ResolvedScenario rs = resolve(sc);

  const std::vector<double> ts = chebyshev_points(rs.curve->alpha(), rs.curve->beta(), kSampleCount);
  json samples = json::array();
  std::array<int, 3> counts{};
  for (double t : ts) {
    const CurveSample cs = rs.curve->sample(t);
    const Vec3Q f = rs.force.at(cs.position);
    const VectorClass vc = classify(frame, f);
    ++counts[static_cast<std::size_t>(vc.tag)];
    samples.push_back({{"t", t}, {"force", vec_json(f)}, {"f_norm", vc.f_norm}, {"tag", to_string(vc.tag)}});
  }

  json results = {{"phi", sc.phi},
                  {"sample_count", ts.size()},
                  {"force_classification",
                   {{"space_like", counts[0]}, {"isotropic", counts[1]}, {"time_like", counts[2]}}},
                  {"samples", samples}};

  std::optional<CaseDiagnostics> d;
  if (is_orthonormal_angle(sc.phi)) {
    d = diagnose(rs.force, *rs.curve);
    results["force_residual"] = d->force_residual;
    results["curve_residual"] = d->curve_residual;
    results["collinearity_minor"] = d->collinearity.max_minor;
    results["isotropic"] = d->isotropic;
    results["case"] = d->isotropic ? json(to_string(d->tag)) : json(nullptr);
  } else {
    results["force_residual"] = nullptr;
    results["curve_residual"] = nullptr;
    results["isotropic"] = nullptr;
    results["case"] = nullptr;
  }

  if (args.json) {
    out << envelope("classify", scenario_to_json(sc), results).dump(2) << '\n';
    return kExitOk;
  }
  out << "phi: " << fmt(sc.phi) << '\n';
  out << "force at " << ts.size() << " samples: " << counts[0] << " space_like, " << counts[1] << " isotropic, "
      << counts[2] << " time_like\n";
  if (!d) {
    out << "case: n/a (isotropy and case analysis use the orthonormal frame, phi = pi/2)\n";
    return kExitOk;
  }
  out << "force isotropy residual: " << fmt(d->force_residual) << '\n';
  out << "curve isotropy residual: " << fmt(d->curve_residual) << '\n';
  out << "collinearity minor: " << fmt(d->collinearity.max_minor) << '\n';
  if (d->isotropic) {
    out << "case: " << to_string(d->tag) << '\n';
  } else {
    out << "case: NotIsotropic (max residual " << fmt(std::max(d->force_residual, d->curve_residual)) << ")\n";
  }
  return kExitOk;
}

int cmd_work(const ScenarioArgs& args, std::ostream& out) {
  const Scenario sc = load_with_overrides(args);
  if (!is_orthonormal_angle(sc.phi)) {
    throw ScenarioError("frame.phi", "work is computed in the orthonormal frame; phi must be pi/2");
  }
  const ResolvedScenario rs = resolve(sc);
  const WorkResult w = work(rs.force, *rs.curve, rs.tol);

  if (args.json) {
    const json results = {{"work", w.value},
                          {"method", to_string(w.method)},
                          {"error_estimate", w.error_estimate},
                          {"cross_check_delta", w.cross_check_delta},
                          {"case_assumption_residual", w.case_assumption_residual},
                          {"depth_exceeded", w.depth_exceeded},
                          {"fell_back_to_direct", w.fell_back_to_direct}};
    out << envelope("work", scenario_to_json(sc), results).dump(2) << '\n';
    return kExitOk;
  }
  out << "work: " << fmt(w.value) << '\n';
  out << "method: " << to_string(w.method) << '\n';
  out << "error_estimate: " << fmt(w.error_estimate) << '\n';
  out << "cross_check_delta: " << fmt(w.cross_check_delta) << '\n';
  if (w.depth_exceeded) {
    out << "warning: quadrature depth limit reached\n";
  }
  if (w.fell_back_to_direct) {
    out << "note: case formula denominator vanished; value from direct quadrature\n";
  }
  return kExitOk;
}

Expr parse_plane_p(const std::string& text) {
  Expr p = [&] {
    try {
      return parse(text);
    } catch (const Error& e) {
      throw InvalidInput(std::string("--p: ") + e.what());
    }
  }();
  if ((p.variables() & ~(var_bit(Var::X) | var_bit(Var::Y))) != 0) {
    throw InvalidInput("--p: may only use the variables x, y");
  }
  return p;
}

double resolve_tol(const std::optional<double>& flag) {
  if (flag) {
    if (!(*flag > 0.0) || !std::isfinite(*flag)) {
      throw InvalidInput("--tol: must be a positive number");
    }
    return *flag;
  }
  return default_tolerance();
}

void require_interval(double alpha, double beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !(alpha < beta)) {
    throw InvalidInput("--beta: must exceed --alpha");
  }
}

struct PlaneArgs {
  double phi = 0.0;
  std::string p = "1";
  std::optional<std::string> source;
  std::optional<std::string> target;
  double alpha = 0.0;
  double beta = 1.0;
  std::optional<double> tol;
  bool json = false;
};

int cmd_plane(const PlaneArgs& args, std::ostream& out) {
  PlaneContext ctx{};
  try {
    ctx = build_plane(args.phi);
  } catch (const OutOfRange& e) {
    throw InvalidInput(std::string("--phi: ") + e.what());
  }
  if (args.source.has_value() != args.target.has_value()) {
    throw InvalidInput("--source and --target must be given together");
  }
  const Expr p = parse_plane_p(args.p);
  require_interval(args.alpha, args.beta);
  const double tol = resolve_tol(args.tol);
  const auto line_of = [](const std::string& s) { return s == "c1" ? PlaneLine::C1 : PlaneLine::C2; };

  std::optional<WorkResult> w;
  if (args.source && ctx.case_tag != PlaneCase::A_NoIsotropic) {
    const PlaneLine source = line_of(*args.source);
    const PlaneLine target = line_of(*args.target);
    if (ctx.case_tag != PlaneCase::D_RightAngle) {
      w = work_cross(ctx, p, source, target, args.alpha, args.beta, tol);
    } else if (source == target) {
      w = WorkResult{};
      w->method = WorkMethod::PlaneSameLine;
    } else {
      // c1 is x = 0 (along Qi), c2 is y = 0 (along i).
      w = work_right_angle(p,
                           source == PlaneLine::C1 ? RightAngleOrientation::ForceAlongQi
                                                   : RightAngleOrientation::ForceAlongI,
                           args.alpha, args.beta, tol);
    }
  }

  const std::vector<IsoDirection> dirs = iso_directions(ctx);
  if (args.json) {
    json inputs = {{"phi", args.phi}, {"p", args.p}, {"alpha", args.alpha}, {"beta", args.beta}, {"tol", tol}};
    inputs["source"] = args.source ? json(*args.source) : json(nullptr);
    inputs["target"] = args.target ? json(*args.target) : json(nullptr);
    json directions = json::array();
    for (const IsoDirection& d : dirs) {
      directions.push_back(d.kind == IsoDirection::Kind::VerticalAxis ? json{{"line", "x=0"}}
                                                                      : json{{"line", "y=kx"}, {"slope", d.slope}});
    }
    json results = {{"case", to_string(ctx.case_tag)},
                    {"discriminant", ctx.discriminant},
                    {"f", {{"ii", ctx.f_ii}, {"ij", ctx.f_ij}, {"jj", ctx.f_jj}}},
                    {"isotropic_directions", directions}};
    results["k1"] = ctx.k1 ? json(*ctx.k1) : json(nullptr);
    results["k2"] = ctx.k2 ? json(*ctx.k2) : json(nullptr);
    if (w) {
      results["work"] = w->value;
      results["method"] = to_string(w->method);
      results["error_estimate"] = w->error_estimate;
    } else {
      results["work"] = nullptr;
    }
    out << envelope("plane", inputs, results).dump(2) << '\n';
    return kExitOk;
  }

  out << "case: " << to_string(ctx.case_tag) << '\n';
  out << "discriminant: " << fmt(ctx.discriminant) << '\n';
  out << "f: ii " << fmt(ctx.f_ii) << ", ij " << fmt(ctx.f_ij) << ", jj " << fmt(ctx.f_jj) << '\n';
  if (dirs.empty()) {
    out << "no isotropic directions\n";
  }
  for (const IsoDirection& d : dirs) {
    if (d.kind == IsoDirection::Kind::VerticalAxis) {
      out << "isotropic line: x = 0\n";
    } else {
      out << "isotropic line: y = " << fmt(d.slope) << " x\n";
    }
  }
  if (w) {
    out << "work: " << fmt(w->value) << '\n';
    out << "method: " << to_string(w->method) << '\n';
  } else if (args.source) {
    out << "work: n/a\n";
  }
  return kExitOk;
}

struct Table1Args {
  std::string p = "1";
  double alpha = 0.0;
  double beta = 1.0;
  std::optional<double> tol;
  bool json = false;
};

int cmd_table1(const Table1Args& args, std::ostream& out) {
  const Expr p = parse_plane_p(args.p);
  require_interval(args.alpha, args.beta);
  const double tol = resolve_tol(args.tol);
  const std::vector<Table1Row> rows = table1_report(p, args.alpha, args.beta, default_table1_angles(), tol);

  if (args.json) {
    json items = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Table1Row& r = rows[i];
      items.push_back({{"row", i + 1},
                       {"regime", r.regime},
                       {"acts_on", r.acts_on},
                       {"trajectory", r.trajectory},
                       {"formula", r.formula},
                       {"phi", r.phi},
                       {"work", r.value ? json(*r.value) : json(nullptr)}});
    }
    const json inputs = {{"p", args.p}, {"alpha", args.alpha}, {"beta", args.beta}, {"tol", tol}};
    out << envelope("table1", inputs, {{"rows", items}}).dump(2) << '\n';
    return kExitOk;
  }
  out << "row | phi | acts on | trajectory | A | work\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Table1Row& r = rows[i];
    out << i + 1 << " | " << r.regime << " | " << r.acts_on << " | " << r.trajectory << " | " << r.formula << " | "
        << (r.value ? fmt(*r.value) : std::string("-")) << '\n';
  }
  return kExitOk;
}

int cmd_verify(std::uint64_t seed, bool as_json, std::ostream& out) {
  VerifyOptions options;
  options.seed = seed;
  const VerifyReport report = run_verify(options);
  std::size_t failed = 0;
  for (const CheckResult& c : report.checks) {
    failed += c.passed ? 0 : 1;
  }
  if (as_json) {
    json checks = json::array();
    for (const CheckResult& c : report.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"seconds", c.seconds}});
    }
    const json results = {{"checks", checks},
                          {"passed", report.checks.size() - failed},
                          {"failed", failed},
                          {"seconds", report.seconds}};
    out << envelope("verify", {{"seed", seed}}, results).dump(2) << '\n';
  } else {
    for (const CheckResult& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.passed) {
        out << ": " << c.detail;
      }
      out << '\n';
    }
    out << report.checks.size() - failed << "/" << report.checks.size() << " checks passed in "
        << fmt(report.seconds) << " s\n";
  }
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Work of isotropic force fields along isotropic curves", "isowork"};
  app.require_subcommand(1);

  ScenarioArgs classify_args;
  CLI::App* classify_cmd = app.add_subcommand("classify", "Isotropy residuals, vector classes and case tag");
  add_scenario_args(classify_cmd, classify_args);

  ScenarioArgs work_args;
  CLI::App* work_cmd = app.add_subcommand("work", "Work of the force along the curve");
  add_scenario_args(work_cmd, work_args);

  PlaneArgs plane_args;
  CLI::App* plane_cmd = app.add_subcommand("plane", "Isotropic lines of the plane {i, Qi} and the work along them");
  plane_cmd->add_option("--phi", plane_args.phi, "Angle between i and Qi, in (0, 2pi/3]")->required();
  plane_cmd->add_option("--p", plane_args.p, "P(x, y)")->capture_default_str();
  plane_cmd->add_option("--source", plane_args.source, "Line carrying F")->check(CLI::IsMember({"c1", "c2"}));
  plane_cmd->add_option("--target", plane_args.target, "Line traversed")->check(CLI::IsMember({"c1", "c2"}));
  plane_cmd->add_option("--alpha", plane_args.alpha)->capture_default_str();
  plane_cmd->add_option("--beta", plane_args.beta)->capture_default_str();
  plane_cmd->add_option("--tol", plane_args.tol);
  plane_cmd->add_flag("--json", plane_args.json);

  Table1Args table_args;
  CLI::App* table_cmd = app.add_subcommand("table1", "The eight-row work table");
  table_cmd->add_option("--p", table_args.p, "P(x, y)")->capture_default_str();
  table_cmd->add_option("--alpha", table_args.alpha)->capture_default_str();
  table_cmd->add_option("--beta", table_args.beta)->capture_default_str();
  table_cmd->add_option("--tol", table_args.tol);
  table_cmd->add_flag("--json", table_args.json);

  std::uint64_t seed = VerifyOptions{}.seed;
  bool verify_json = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the invariant and oracle suite");
  verify_cmd->add_option("--seed", seed)->capture_default_str();
  verify_cmd->add_flag("--json", verify_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (classify_cmd->parsed()) {
      return cmd_classify(classify_args, out);
    }
    if (work_cmd->parsed()) {
      return cmd_work(work_args, out);
    }
    if (plane_cmd->parsed()) {
      return cmd_plane(plane_args, out);
    }
    if (table_cmd->parsed()) {
      return cmd_table1(table_args, out);
    }
    return cmd_verify(seed, verify_json, out);
  } catch (const CrossCheckFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitCrossCheck;
  } catch (const Error& e) {
    // NotIsotropic and every parse or validation failure.
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace isowork

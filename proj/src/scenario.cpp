#include "isowork/scenario.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>

#include "isowork/quadrature.hpp"

namespace isowork {

namespace {

using nlohmann::json;

const json& require_object(const json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw ScenarioError(key, "missing");
  }
  const json& obj = doc.at(key);
  if (!obj.is_object()) {
    throw ScenarioError(key, "must be an object");
  }
  return obj;
}

std::string require_string(const json& obj, const std::string& section, const char* key) {
  const std::string field = section + "." + key;
  if (!obj.contains(key)) {
    throw ScenarioError(field, "missing");
  }
  if (!obj.at(key).is_string()) {
    throw ScenarioError(field, "must be an expression string");
  }
  return obj.at(key).get<std::string>();
}

std::optional<std::string> optional_string(const json& obj, const std::string& section, const char* key) {
  if (!obj.contains(key) || obj.at(key).is_null()) {
    return std::nullopt;
  }
  return require_string(obj, section, key);
}

double require_number(const json& obj, const std::string& field, const char* key) {
  if (!obj.contains(key)) {
    throw ScenarioError(field, "missing");
  }
  if (!obj.at(key).is_number()) {
    throw ScenarioError(field, "must be a number");
  }
  const double v = obj.at(key).get<double>();
  if (!std::isfinite(v)) {
    throw ScenarioError(field, "must be finite");
  }
  return v;
}

Expr parse_field(const std::string& text, const std::string& field) {
  try {
    return parse(text);
  } catch (const Error& e) {
    throw ScenarioError(field, e.what());
  }
}

void require_only(const Expr& e, VarSet allowed, const std::string& field, const char* names) {
  if ((e.variables() & ~allowed) != 0) {
    throw ScenarioError(field, std::string("may only use the variables ") + names);
  }
}

}  // namespace

Scenario scenario_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw ScenarioError("scenario", "must be a JSON object");
  }
  Scenario sc;
  sc.phi = std::numbers::pi / 2.0;
  if (doc.contains("frame")) {
    const json& frame = require_object(doc, "frame");
    if (frame.contains("phi")) {
      sc.phi = require_number(frame, "frame.phi", "phi");
    }
  }
  const json& force = require_object(doc, "force");
  sc.p = require_string(force, "force", "P");
  sc.r = require_string(force, "force", "R");
  sc.s = optional_string(force, "force", "S");

  const json& curve = require_object(doc, "curve");
  sc.x = require_string(curve, "curve", "x");
  sc.y = require_string(curve, "curve", "y");
  sc.z = optional_string(curve, "curve", "z");
  sc.alpha = require_number(curve, "curve.alpha", "alpha");
  sc.beta = require_number(curve, "curve.beta", "beta");
  if (!(sc.alpha < sc.beta)) {
    throw ScenarioError("curve.beta", "must exceed curve.alpha");
  }
  if (doc.contains("tol") && !doc.at("tol").is_null()) {
    sc.tol = require_number(doc, "tol", "tol");
    if (!(*sc.tol > 0.0)) {
      throw ScenarioError("tol", "must be positive");
    }
  }
  return sc;
}

json scenario_to_json(const Scenario& sc) {
  json force = {{"P", sc.p}, {"R", sc.r}};
  if (sc.s) {
    force["S"] = *sc.s;
  }
  json curve = {{"x", sc.x}, {"y", sc.y}, {"alpha", sc.alpha}, {"beta", sc.beta}};
  if (sc.z) {
    curve["z"] = *sc.z;
  }
  json doc = {{"frame", {{"phi", sc.phi}}}, {"force", force}, {"curve", curve}};
  if (sc.tol) {
    doc["tol"] = *sc.tol;
  }
  return doc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ScenarioError("file", "cannot open '" + path + "'");
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ScenarioError("file", std::string("invalid JSON: ") + e.what());
  }
  return scenario_from_json(doc);
}

double default_tolerance() {
  const char* env = std::getenv("ISOWORK_TOL");
  if (env == nullptr || *env == '\0') {
    return kDefaultTolerance;
  }
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw ScenarioError("ISOWORK_TOL", "must be a positive number");
  }
  return v;
}

ResolvedScenario resolve(const Scenario& sc) {
  constexpr VarSet kSpace = var_bit(Var::X) | var_bit(Var::Y) | var_bit(Var::Z);
  constexpr VarSet kParam = var_bit(Var::T);

  const double tol = sc.tol ? *sc.tol : default_tolerance();

  Expr p = parse_field(sc.p, "force.P");
  require_only(p, kSpace, "force.P", "x, y, z");
  Expr r = parse_field(sc.r, "force.R");
  require_only(r, kSpace, "force.R", "x, y, z");
  std::optional<ForceField> force;
  if (sc.s) {
    Expr s = parse_field(*sc.s, "force.S");
    require_only(s, kSpace, "force.S", "x, y, z");
    force.emplace(std::move(p), std::move(r), std::move(s));
  } else {
    force.emplace(complete_isotropic_force(std::move(p), std::move(r)));
  }

  Expr x = parse_field(sc.x, "curve.x");
  require_only(x, kParam, "curve.x", "t");
  Expr y = parse_field(sc.y, "curve.y");
  require_only(y, kParam, "curve.y", "t");
  std::unique_ptr<Curve> curve;
  if (sc.z) {
    Expr z = parse_field(*sc.z, "curve.z");
    require_only(z, kParam, "curve.z", "t");
    curve = std::make_unique<ParamCurve>(std::move(x), std::move(y), std::move(z), sc.alpha, sc.beta);
  } else {
    try {
      curve = std::make_unique<CompletedCurve>(complete_isotropic_curve(std::move(x), std::move(y), 0.0, sc.alpha,
                                                                        sc.beta, tol));
    } catch (const DegenerateTangent& e) {
      throw ScenarioError("curve.z", std::string("cannot complete: ") + e.what());
    } catch (const DomainError& e) {
      throw ScenarioError("curve", std::string("cannot complete: ") + e.what());
    }
  }
  return {std::move(*force), std::move(curve), tol};
}

}  // namespace isowork

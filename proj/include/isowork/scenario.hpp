#ifndef ISOWORK_SCENARIO_HPP
#define ISOWORK_SCENARIO_HPP

#include <memory>
#include <numbers>
#include <optional>
#include <string>

#include <json.hpp>

#include "isowork/errors.hpp"
#include "isowork/fields_curves.hpp"

namespace isowork {

/// A scenario file:
///
///   {
///     "frame": {"phi": 1.5707963267948966},          optional, default pi/2
///     "force": {"P": "...", "R": "...", "S": "..."},   S optional
///     "curve": {"x": "...", "y": "...", "z": "...",   z optional
///               "alpha": 0, "beta": 1},
///     "tol": 1e-10                                     optional
///   }
///
/// A missing S is completed as -PR/(P+R); a missing z is completed from
/// z' = -x'y'/(x'+y') with z(alpha) = 0.
struct Scenario {
  double phi = std::numbers::pi / 2.0;
  std::string p;
  std::string r;
  std::optional<std::string> s;
  std::string x;
  std::string y;
  std::optional<std::string> z;
  double alpha = 0.0;
  double beta = 1.0;
  std::optional<double> tol;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Input error attributed to one scenario field, e.g. "force.P".
class ScenarioError : public InvalidInput {
 public:
  ScenarioError(std::string field, const std::string& message)
      : InvalidInput(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

Scenario scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const Scenario& scenario);

/// Reads and parses a scenario file; throws ScenarioError.
Scenario load_scenario(const std::string& path);

/// Default tolerance, overridden by the ISOWORK_TOL environment variable.
double default_tolerance();

/// Parsed force and curve, completions applied.
struct ResolvedScenario {
  ForceField force;
  std::unique_ptr<Curve> curve;
  double tol;
};

/// Parses every expression; errors name the offending field.
ResolvedScenario resolve(const Scenario& scenario);

}  // namespace isowork

#endif  // ISOWORK_SCENARIO_HPP

#ifndef ISOWORK_VERIFY_HPP
#define ISOWORK_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "isowork/plane2.hpp"

namespace isowork {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 0x15057;
  /// Substitutable so a perturbed builder can demonstrate that the suite
  /// catches a wrong coefficient.
  std::function<PlaneContext(double)> plane_builder = build_plane;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  bool all_passed() const;
};

/// Runs every invariant and oracle check of the library.
VerifyReport run_verify(const VerifyOptions& options = {});

}  // namespace isowork

#endif  // ISOWORK_VERIFY_HPP

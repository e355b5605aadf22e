#include "isowork/errors.hpp"

#include <cstdio>

namespace isowork {

namespace {

std::string format_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

NotIsotropic::NotIsotropic(double force_residual, double curve_residual)
    : Error("isotropy hypothesis violated (force residual " + format_g(force_residual) + ", curve residual " +
            format_g(curve_residual) + ")"),
      force_residual_(force_residual),
      curve_residual_(curve_residual) {}

CrossCheckFailure::CrossCheckFailure(double case_value, double direct_value, double allowed)
    : Error("case formula " + format_g(case_value) + " disagrees with direct quadrature " + format_g(direct_value) +
            " beyond " + format_g(allowed)),
      case_value_(case_value),
      direct_value_(direct_value) {}

}  // namespace isowork

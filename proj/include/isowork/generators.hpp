#ifndef ISOWORK_GENERATORS_HPP
#define ISOWORK_GENERATORS_HPP

// Random inputs for property checks. Generators only build inputs; expected
// values always come from an independent computation at the call site.

#include <random>

#include "isowork/expr.hpp"
#include "isowork/fields_curves.hpp"

namespace isowork::gen {

using Rng = std::mt19937_64;

/// Arbitrary well-formed tree of depth <= max_depth over all node kinds.
/// Not necessarily evaluable.
Expr any_expr(Rng& rng, int max_depth);

/// Smooth, bounded expression over `vars` that is defined everywhere, with
/// moderate derivatives.
Expr smooth_expr(Rng& rng, int max_depth, VarSet vars);

/// Nonzero direction with uv + vq + qu = 0 up to rounding.
Vec3Q isotropic_direction(Rng& rng);

/// F = K(x, y, z) d and c(t) = p0 + h(t) d for one isotropic direction d.
struct CollinearPair {
  ForceField force;
  ParamCurve curve;
};
CollinearPair collinear_pair(Rng& rng);

/// Both F and c built by the isotropic completions, with P, R > 0 and
/// x', y' > 0, so neither denominator vanishes.
struct CompletedPair {
  ForceField force;
  CompletedCurve curve;
};
CompletedPair case_iv_pair(Rng& rng);

/// Completed force along a curve with constant x and y.
struct ParamPair {
  ForceField force;
  ParamCurve curve;
};
ParamPair case_ii_pair(Rng& rng);

/// F = (0, 0, S) along an isotropic curve with x' + y' != 0.
CompletedPair case_iii_pair(Rng& rng);

}  // namespace isowork::gen

#endif  // ISOWORK_GENERATORS_HPP

#pragma once

#include <optional>

#include "holm/curves.hpp"

namespace holm {

EPoint e_negate(const WeierstrassCurve& curve, const EPoint& p);

/// Chord-tangent addition. Doubling a point with y = 0 gives INFINITY.
EPoint e_add(const WeierstrassCurve& curve, const EPoint& p, const EPoint& q);

/// n*p by double-and-add; negative n negates, 0*p = INFINITY.
EPoint e_scalar_mul(const WeierstrassCurve& curve, long long n, const EPoint& p);

/// Group law on H transported through gamma.
HPoint h_add(const HolmParams& params, const HPoint& p, const HPoint& q);
HPoint h_negate(const HolmParams& params, const HPoint& p);

/// Least m in [1, max_order] with m*p = INFINITY, if any.
std::optional<int> order_upto(const WeierstrassCurve& curve, const EPoint& p, int max_order = 12);

}  // namespace holm

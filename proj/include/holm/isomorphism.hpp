#pragma once

#include "holm/curves.hpp"

namespace holm {

/// H -> E:  (x, y) -> ( kl(kx - ly)/(lx - ky), kl(k^2 - l^2)/(lx - ky) ),
/// with the identity (0, 0) sent to INFINITY.
///
/// Throws ValidationError if p is not on H. On H the denominator lx - ky
/// vanishes only at (0, 0): substituting y = lx/k into the curve equation
/// leaves x^3 (l^2/k^2 - 1) = 0, and k != l. Reaching a zero denominator at
/// any other point throws ConsistencyError.
EPoint gamma(const HolmParams& params, const HPoint& p);

/// E -> H:  (x, y) -> ( k(x - l^2)/y, l(x - k^2)/y ), INFINITY -> (0, 0).
///
/// Throws ValidationError if p is not on the Holm-derived curve, and
/// ContradictionError for an affine point with y = 0 (no such rational point
/// exists when k != l).
HPoint gamma_inv(const HolmParams& params, const EPoint& p);

}  // namespace holm

#include "holm/isomorphism.hpp"

namespace holm {

EPoint gamma(const HolmParams& params, const HPoint& p) {
    if (!on_H(params, p)) throw ValidationError("gamma: point " + p.str() + " is not on H");
    if (p.is_identity()) return EPoint::infinity();
    Rational k(params.k());
    Rational l(params.l());
    Rational den = l * p.x - k * p.y;
    if (den.is_zero()) {
        throw ConsistencyError("gamma: lx - ky = 0 at non-identity point " + p.str());
    }
    Rational kl = k * l;
    return EPoint::affine(kl * (k * p.x - l * p.y) / den, kl * (k * k - l * l) / den);
}

HPoint gamma_inv(const HolmParams& params, const EPoint& p) {
    WeierstrassCurve curve = curve_from_params(params);
    if (!on_E(curve, p)) throw ValidationError("gamma_inv: point " + p.str() + " is not on E");
    if (p.is_infinity()) return HPoint::identity();
    if (p.y().is_zero()) {
        throw ContradictionError("gamma_inv: rational point " + p.str() +
                                 " with y = 0 on a Holm-derived curve");
    }
    Rational k(params.k());
    Rational l(params.l());
    return {k * (p.x() - l * l) / p.y(), l * (p.x() - k * k) / p.y()};
}

}  // namespace holm

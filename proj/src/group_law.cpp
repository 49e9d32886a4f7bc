#include "holm/group_law.hpp"

#include "holm/isomorphism.hpp"

namespace holm {

EPoint e_negate(const WeierstrassCurve&, const EPoint& p) {
    if (p.is_infinity()) return p;
    return EPoint::affine(p.x(), -p.y());
}

EPoint e_add(const WeierstrassCurve& curve, const EPoint& p, const EPoint& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const Rational& x1 = p.x();
    const Rational& y1 = p.y();
    const Rational& x2 = q.x();
    const Rational& y2 = q.y();
    Rational slope;
    if (x1 == x2) {
        if (y1 == -y2) return EPoint::infinity();  // inverse pair, or y = 0 doubled
        slope = (Rational(3) * x1 * x1 + Rational(curve.a())) / (Rational(2) * y1);
    } else {
        slope = (y2 - y1) / (x2 - x1);
    }
    Rational x3 = slope * slope - x1 - x2;
    Rational y3 = slope * (x1 - x3) - y1;
    return EPoint::affine(std::move(x3), std::move(y3));
}

EPoint e_scalar_mul(const WeierstrassCurve& curve, long long n, const EPoint& p) {
    EPoint base = n < 0 ? e_negate(curve, p) : p;
    unsigned long long m = n < 0 ? 0ULL - static_cast<unsigned long long>(n)
                                 : static_cast<unsigned long long>(n);
    EPoint acc = EPoint::infinity();
    while (m != 0) {
        if ((m & 1ULL) != 0) acc = e_add(curve, acc, base);
        m >>= 1;
        if (m != 0) base = e_add(curve, base, base);
    }
    return acc;
}

HPoint h_add(const HolmParams& params, const HPoint& p, const HPoint& q) {
    WeierstrassCurve curve = curve_from_params(params);
    return gamma_inv(params, e_add(curve, gamma(params, p), gamma(params, q)));
}

HPoint h_negate(const HolmParams& params, const HPoint& p) {
    WeierstrassCurve curve = curve_from_params(params);
    return gamma_inv(params, e_negate(curve, gamma(params, p)));
}

std::optional<int> order_upto(const WeierstrassCurve& curve, const EPoint& p, int max_order) {
    EPoint multiple = p;
    for (int m = 1; m <= max_order; ++m) {
        if (multiple.is_infinity()) return m;
        multiple = e_add(curve, multiple, p);
    }
    return std::nullopt;
}

}  // namespace holm

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holm/exact_arith.hpp"

namespace holm {

/// Parameters (k, l) of the Holm curve k(y^3 - y) = l(x^3 - x): distinct,
/// positive, coprime and squarefree.
class HolmParams {
public:
    /// Throws ValidationError naming the first violated constraint.
    static HolmParams make(const Integer& k, const Integer& l);

    /// First violated constraint as a readable message, or nullopt when valid.
    static std::optional<std::string> violation(const Integer& k, const Integer& l);

    const Integer& k() const { return k_; }
    const Integer& l() const { return l_; }

    friend bool operator==(const HolmParams&, const HolmParams&) = default;

private:
    HolmParams(Integer k, Integer l) : k_(std::move(k)), l_(std::move(l)) {}
    Integer k_;
    Integer l_;
};

/// y^2 = x^3 + a x + b with nonzero discriminant.
class WeierstrassCurve {
public:
    /// Throws ValidationError when 4a^3 + 27b^2 = 0.
    static WeierstrassCurve make(const Integer& a, const Integer& b);

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const std::optional<HolmParams>& params() const { return params_; }
    bool holm_derived() const { return params_.has_value(); }

    /// -16(4a^3 + 27b^2).
    Integer discriminant() const;

    /// x^3 + a x + b.
    Rational rhs(const Rational& x) const;

private:
    friend WeierstrassCurve curve_from_params(const HolmParams& params);
    WeierstrassCurve(Integer a, Integer b, std::optional<HolmParams> params)
        : a_(std::move(a)), b_(std::move(b)), params_(std::move(params)) {}
    Integer a_;
    Integer b_;
    std::optional<HolmParams> params_;
};

/// Point of E: the point at infinity or an affine (x, y).
class EPoint {
public:
    static EPoint infinity() { return EPoint(); }
    static EPoint affine(Rational x, Rational y) { return EPoint(std::move(x), std::move(y)); }

    bool is_infinity() const { return !coords_.has_value(); }
    const Rational& x() const;
    const Rational& y() const;

    /// Affine with both reduced coordinates integers.
    bool is_integral() const;

    /// "INFINITY" or "(x, y)".
    std::string str() const;

    friend bool operator==(const EPoint&, const EPoint&) = default;

private:
    EPoint() = default;
    EPoint(Rational x, Rational y) : coords_(std::in_place, std::move(x), std::move(y)) {}
    std::optional<std::pair<Rational, Rational>> coords_;
};

/// Affine point on the Holm curve. (0, 0) is the group identity.
struct HPoint {
    Rational x;
    Rational y;

    static HPoint identity() { return {Rational(0), Rational(0)}; }
    bool is_identity() const { return x.is_zero() && y.is_zero(); }
    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }

    friend bool operator==(const HPoint&, const HPoint&) = default;
};

/// a = -3k^2 l^2, b = k^2 l^2 (k^2 + l^2).
WeierstrassCurve curve_from_params(const HolmParams& params);

bool on_E(const WeierstrassCurve& curve, const EPoint& p);
bool on_H(const HolmParams& params, const HPoint& p);

/// max(10^4, 4 k^2 l^2 (k^2 + l^2)) for Holm-derived curves, 10^4 otherwise.
Integer default_x_bound(const WeierstrassCurve& curve);

/// Every affine point with integer x in [-x_bound, x_bound] and integer y,
/// sorted by (x, y); y = 0 appears once. The scan is split across `workers`
/// threads; the result does not depend on the split.
std::vector<EPoint> find_integral_points(const WeierstrassCurve& curve, const Integer& x_bound,
                                         unsigned workers = 1);

/// Sorted distinct integer roots of x^3 + a x + c.
std::vector<Integer> cubic_integer_roots(const Integer& a, const Integer& c);

/// Facts about a point that cannot occur on a Holm-derived curve: x = 0 or
/// y = 0 for an affine rational point. Empty for other curves.
std::vector<std::string> audit_point(const WeierstrassCurve& curve, const EPoint& p);

}  // namespace holm

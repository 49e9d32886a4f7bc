#include <doctest.h>

#include <random>

#include "holm/division_polys.hpp"
#include "holm/group_law.hpp"
#include "holm/isomorphism.hpp"
#include "oracles.hpp"

using namespace holm;

namespace {
WeierstrassCurve holm_curve(long k, long l) { return curve_from_params(HolmParams::make(k, l)); }
EPoint pt(long x, long y) { return EPoint::affine(Rational(x), Rational(y)); }
EPoint frac_pt(long xn, long xd, long yn, long yd) {
    return EPoint::affine(Rational(xn, xd), Rational(yn, yd));
}
}  // namespace

TEST_CASE("e_negate") {
    auto c = holm_curve(1, 2);
    CHECK(e_negate(c, pt(1, -3)) == pt(1, 3));
    CHECK(e_negate(c, EPoint::infinity()).is_infinity());
    CHECK(e_negate(c, pt(4, 6)) == pt(4, -6));
}

TEST_CASE("e_add worked examples") {
    auto c = holm_curve(1, 2);
    CHECK(e_add(c, pt(1, -3), EPoint::infinity()) == pt(1, -3));
    CHECK(e_add(c, EPoint::infinity(), pt(1, -3)) == pt(1, -3));
    CHECK(e_add(c, pt(1, -3), pt(1, 3)).is_infinity());
    CHECK(e_add(c, pt(1, -3), pt(1, -3)) == frac_pt(1, 4, 33, 8));
    CHECK(e_add(c, pt(4, 6), pt(4, 6)) == pt(1, 3));
}

TEST_CASE("doubling a y = 0 point gives infinity") {
    auto c = WeierstrassCurve::make(0, -1);
    CHECK(e_add(c, pt(1, 0), pt(1, 0)).is_infinity());
    CHECK(order_upto(c, pt(1, 0)) == 2);
}

TEST_CASE("e_scalar_mul") {
    auto c = holm_curve(1, 2);
    CHECK(e_scalar_mul(c, 0, pt(1, -3)).is_infinity());
    CHECK(e_scalar_mul(c, 1, pt(1, -3)) == pt(1, -3));
    CHECK(e_scalar_mul(c, 2, pt(1, -3)) == frac_pt(1, 4, 33, 8));
    CHECK(e_scalar_mul(c, -2, pt(1, -3)) == frac_pt(1, 4, -33, 8));
    CHECK(e_scalar_mul(c, 5, EPoint::infinity()).is_infinity());
}

TEST_CASE("double-and-add agrees with repeated addition") {
    for (auto [k, l] : {std::pair{1, 2}, {3, 1}, {5, 6}}) {
        auto c = holm_curve(k, l);
        for (const auto& p : find_integral_points(c, 200)) {
            auto ref = oracle::to_pt(p);
            for (long n = 0; n <= 13; ++n) {
                CHECK(e_scalar_mul(c, n, p) == oracle::from_pt(oracle::repeated(c.a(), n, ref)));
            }
        }
    }
}

TEST_CASE("order_upto") {
    auto c = holm_curve(1, 2);
    CHECK(order_upto(c, EPoint::infinity()) == 1);
    CHECK_FALSE(order_upto(c, pt(1, -3)));
    CHECK_FALSE(order_upto(c, pt(4, 6), 40));
    // y^2 = x^3 + 1 has a point (2, 3) of order 6.
    auto c6 = WeierstrassCurve::make(0, 1);
    CHECK(order_upto(c6, pt(2, 3)) == 6);
    CHECK_FALSE(order_upto(c6, pt(2, 3), 5));
}

TEST_CASE("h_add basics") {
    auto params = HolmParams::make(1, 2);
    auto curve = curve_from_params(params);
    CHECK(h_add(params, HPoint{0, 0}, HPoint{1, 0}) == HPoint{1, 0});
    CHECK(h_add(params, HPoint{1, 0}, h_negate(params, HPoint{1, 0})) == HPoint::identity());
    CHECK(h_add(params, HPoint{1, 0}, HPoint{1, 0}) == gamma_inv(params, frac_pt(1, 4, 33, 8)));
    CHECK(on_H(params, h_add(params, HPoint{1, 0}, HPoint{0, 1})));
    (void)curve;
}

TEST_CASE("h_add group axioms on H") {
    auto params = HolmParams::make(3, 5);
    std::vector<HPoint> pts;
    for (long x : {-1, 0, 1}) {
        for (long y : {-1, 0, 1}) pts.push_back({x, y});
    }
    pts.push_back(h_add(params, pts[1], pts[5]));
    for (const auto& p : pts) {
        CHECK(h_add(params, p, HPoint::identity()) == p);
        CHECK(h_add(params, p, h_negate(params, p)) == HPoint::identity());
        for (const auto& q : pts) {
            CHECK(h_add(params, p, q) == h_add(params, q, p));
        }
    }
    for (std::size_t i = 0; i < pts.size(); i += 2) {
        for (std::size_t j = 1; j < pts.size(); j += 3) {
            for (std::size_t m = 0; m < pts.size(); m += 4) {
                const auto &p = pts[i], &q = pts[j], &r = pts[m];
                CHECK(h_add(params, h_add(params, p, q), r) == h_add(params, p, h_add(params, q, r)));
            }
        }
    }
}

TEST_CASE("chord-tangent doubling equals the closed form") {
    for (auto [k, l] : {std::pair{1, 2}, {2, 3}, {3, 1}, {5, 6}, {7, 2}}) {
        auto c = holm_curve(k, l);
        for (const auto& p : find_integral_points(c, 500)) {
            for (long m : {1, 2, 3}) {
                EPoint q = e_scalar_mul(c, m, p);
                CHECK(e_add(c, q, q) == double_closed_form(c, q));
            }
        }
    }
}

TEST_CASE("scalar multiplication is additive in the multiplier") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> dist(-9, 9);
    auto c = holm_curve(2, 3);
    auto pts = find_integral_points(c, 300);
    for (int i = 0; i < 60; ++i) {
        const auto& p = pts[static_cast<std::size_t>(i) % pts.size()];
        int m = dist(rng), n = dist(rng);
        CHECK(e_scalar_mul(c, m + n, p) == e_add(c, e_scalar_mul(c, m, p), e_scalar_mul(c, n, p)));
    }
}

#include "holm/curves.hpp"

#include <algorithm>
#include <future>

namespace holm {

std::optional<std::string> HolmParams::violation(const Integer& k, const Integer& l) {
    if (k < 1) return "k must be a positive integer, got " + to_string(k);
    if (l < 1) return "l must be a positive integer, got " + to_string(l);
    if (k == l) return "k = l (" + to_string(k) + "); k and l must be distinct";
    Integer g = gcd(k, l);
    if (g != 1) {
        return "k and l are not coprime (gcd(" + to_string(k) + ", " + to_string(l) +
               ") = " + to_string(g) + ")";
    }
    if (!is_squarefree(k)) return "k = " + to_string(k) + " is not squarefree";
    if (!is_squarefree(l)) return "l = " + to_string(l) + " is not squarefree";
    return std::nullopt;
}

HolmParams HolmParams::make(const Integer& k, const Integer& l) {
    if (auto why = violation(k, l)) throw ValidationError("invalid Holm parameters: " + *why);
    return HolmParams(k, l);
}

WeierstrassCurve WeierstrassCurve::make(const Integer& a, const Integer& b) {
    Integer d = 4 * a * a * a + 27 * b * b;
    if (d == 0) {
        throw ValidationError("singular curve: 4a^3 + 27b^2 = 0 for a = " + to_string(a) +
                              ", b = " + to_string(b));
    }
    return WeierstrassCurve(a, b, std::nullopt);
}

Integer WeierstrassCurve::discriminant() const {
    return Integer(-16 * (4 * a_ * a_ * a_ + 27 * b_ * b_));
}

Rational WeierstrassCurve::rhs(const Rational& x) const {
    return x * x * x + Rational(a_) * x + Rational(b_);
}

WeierstrassCurve curve_from_params(const HolmParams& params) {
    Integer kl2 = params.k() * params.k() * params.l() * params.l();
    Integer a = -3 * kl2;
    Integer b = kl2 * (params.k() * params.k() + params.l() * params.l());
    // 4a^3 + 27b^2 = 27 k^4 l^4 (k^2 - l^2)^2, nonzero since k != l.
    if (4 * a * a * a + 27 * b * b == 0) {
        throw ConsistencyError("Holm-derived curve is singular");
    }
    return WeierstrassCurve(a, b, params);
}

const Rational& EPoint::x() const {
    if (!coords_) throw std::logic_error("x() of the point at infinity");
    return coords_->first;
}

const Rational& EPoint::y() const {
    if (!coords_) throw std::logic_error("y() of the point at infinity");
    return coords_->second;
}

bool EPoint::is_integral() const {
    return coords_ && coords_->first.is_integer() && coords_->second.is_integer();
}

std::string EPoint::str() const {
    if (!coords_) return "INFINITY";
    return "(" + coords_->first.str() + ", " + coords_->second.str() + ")";
}

bool on_E(const WeierstrassCurve& curve, const EPoint& p) {
    if (p.is_infinity()) return true;
    return p.y() * p.y() == curve.rhs(p.x());
}

bool on_H(const HolmParams& params, const HPoint& p) {
    Rational k(params.k());
    Rational l(params.l());
    return k * (p.y * p.y * p.y - p.y) == l * (p.x * p.x * p.x - p.x);
}

Integer default_x_bound(const WeierstrassCurve& curve) {
    Integer floor_bound = 10000;
    if (!curve.params()) return floor_bound;
    const auto& k = curve.params()->k();
    const auto& l = curve.params()->l();
    Integer canonical = 4 * k * k * l * l * (k * k + l * l);
    return std::max(floor_bound, canonical);
}

namespace {

void scan_range(const WeierstrassCurve& curve, Integer x, const Integer& last,
                std::vector<EPoint>& out) {
    for (; x <= last; ++x) {
        Integer v = x * x * x + curve.a() * x + curve.b();
        auto root = is_perfect_square(v);
        if (!root) continue;
        if (*root == 0) {
            out.push_back(EPoint::affine(Rational(x), Rational(0)));
        } else {
            out.push_back(EPoint::affine(Rational(x), Rational(Integer(-*root))));
            out.push_back(EPoint::affine(Rational(x), Rational(*root)));
        }
    }
}

Integer eval_cubic(const Integer& a, const Integer& c, const Integer& x) {
    return x * x * x + a * x + c;
}

// Integer root of a monotone cubic on [lo, hi]; `increasing` gives the direction.
std::optional<Integer> bisect_root(const Integer& a, const Integer& c, Integer lo, Integer hi,
                                   bool increasing) {
    if (lo > hi) return std::nullopt;
    auto sign_at = [&](const Integer& x) {
        int s = sgn(eval_cubic(a, c, x));
        return increasing ? s : -s;
    };
    // First x in [lo, hi] with sign_at(x) >= 0.
    while (lo < hi) {
        Integer mid = lo + (hi - lo) / 2;
        if (sign_at(mid) >= 0) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    if (sign_at(lo) == 0) return lo;
    return std::nullopt;
}

}  // namespace

std::vector<EPoint> find_integral_points(const WeierstrassCurve& curve, const Integer& x_bound,
                                         unsigned workers) {
    if (x_bound < 1) throw ValidationError("find_integral_points: x_bound must be >= 1");
    workers = std::max(1u, workers);
    Integer first = -x_bound;
    Integer span = 2 * x_bound + 1;
    Integer chunk = (span + workers - 1) / workers;
    std::vector<std::future<std::vector<EPoint>>> parts;
    for (unsigned w = 0; w < workers; ++w) {
        Integer lo = first + chunk * w;
        Integer hi = std::min(Integer(lo + chunk - 1), x_bound);
        if (lo > x_bound) break;
        parts.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async,
                                   [&curve, lo, hi] {
                                       std::vector<EPoint> out;
                                       scan_range(curve, lo, hi, out);
                                       return out;
                                   }));
    }
    std::vector<EPoint> points;
    for (auto& part : parts) {
        auto chunk_points = part.get();
        points.insert(points.end(), chunk_points.begin(), chunk_points.end());
    }
    return points;
}

std::vector<Integer> cubic_integer_roots(const Integer& a, const Integer& c) {
    // Cauchy bound: every real root satisfies |x| < 1 + max(|a|, |c|).
    Integer bound = 1 + std::max(Integer(abs(a)), Integer(abs(c)));
    std::vector<Integer> roots;
    auto push = [&](std::optional<Integer> r) {
        if (r) roots.push_back(*r);
    };
    if (a >= 0) {
        push(bisect_root(a, c, -bound, bound, true));
    } else {
        // Smallest m >= 0 with 3m^2 >= -a; f is increasing for |x| >= m and
        // decreasing on integers with |x| < m.
        Integer m;
        Integer third = (-a + 2) / 3;
        mpz_sqrt(m.get_mpz_t(), third.get_mpz_t());
        while (3 * m * m < -a) ++m;
        push(bisect_root(a, c, -bound, Integer(-m), true));
        push(bisect_root(a, c, Integer(-m + 1), Integer(m - 1), false));
        push(bisect_root(a, c, m, bound, true));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<std::string> audit_point(const WeierstrassCurve& curve, const EPoint& p) {
    std::vector<std::string> findings;
    if (!curve.holm_derived() || p.is_infinity()) return findings;
    if (p.x().is_zero()) {
        findings.push_back("rational point " + p.str() +
                           " has x = 0 on a Holm-derived curve (would force k^2 + l^2 to be a square)");
    }
    if (p.y().is_zero()) {
        findings.push_back("rational point " + p.str() +
                           " has y = 0 on a Holm-derived curve (would force k = l)");
    }
    return findings;
}

}  // namespace holm

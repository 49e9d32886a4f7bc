#include "holm/division_polys.hpp"

#include <algorithm>

namespace holm {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> coeffs(degree + 1);
    coeffs[degree] = c;
    return Poly(std::move(coeffs));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Integer& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

namespace {

std::vector<Integer> schoolbook(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return out;
}

std::size_t max_bits(const std::vector<Integer>& v) {
    std::size_t bits = 0;
    for (const auto& c : v) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    return bits;
}

// Nonnegative coefficients packed into one integer, `limbs` limbs per slot.
Integer pack(const std::vector<Integer>& v, int sign, std::size_t limbs) {
    std::vector<mp_limb_t> buf(v.size() * limbs, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) != sign) continue;
        mpz_export(buf.data() + i * limbs, nullptr, -1, sizeof(mp_limb_t), 0, 0, v[i].get_mpz_t());
    }
    Integer out;
    mpz_import(out.get_mpz_t(), buf.size(), -1, sizeof(mp_limb_t), 0, 0, buf.data());
    return out;
}

void unpack_into(const Integer& packed, std::size_t limbs, int sign, std::vector<Integer>& out) {
    std::size_t count = mpz_size(packed.get_mpz_t());
    std::vector<mp_limb_t> buf(std::max(count, out.size() * limbs), 0);
    mpz_export(buf.data(), nullptr, -1, sizeof(mp_limb_t), 0, 0, packed.get_mpz_t());
    Integer slot;
    for (std::size_t i = 0; i < out.size(); ++i) {
        mpz_import(slot.get_mpz_t(), limbs, -1, sizeof(mp_limb_t), 0, 0, buf.data() + i * limbs);
        if (sign > 0) {
            out[i] += slot;
        } else {
            out[i] -= slot;
        }
    }
}

// Kronecker substitution: split each operand into positive and negative
// parts, evaluate at 2^(64 * limbs) and let GMP multiply the packed integers.
std::vector<Integer> kronecker(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::size_t shorter = std::min(a.size(), b.size());
    std::size_t bits = max_bits(a) + max_bits(b) + 64 - static_cast<std::size_t>(__builtin_clzll(shorter)) + 1;
    std::size_t limbs = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
    Integer ap = pack(a, 1, limbs), an = pack(a, -1, limbs);
    Integer bp = pack(b, 1, limbs), bn = pack(b, -1, limbs);
    std::vector<Integer> out(a.size() + b.size() - 1);
    unpack_into(Integer(ap * bp), limbs, 1, out);
    unpack_into(Integer(an * bn), limbs, 1, out);
    unpack_into(Integer(ap * bn), limbs, -1, out);
    unpack_into(Integer(an * bp), limbs, -1, out);
    return out;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (std::min(a.c_.size(), b.c_.size()) < 24) return Poly(schoolbook(a.c_, b.c_));
    return Poly(kronecker(a.c_, b.c_));
}

std::optional<Poly> Poly::exact_div_monic(const Poly& divisor) const {
    if (divisor.is_zero() || divisor.leading() != 1) {
        throw std::invalid_argument("exact_div_monic: divisor must be monic");
    }
    if (is_zero()) return Poly();
    if (degree() < divisor.degree()) return std::nullopt;
    std::vector<Integer> rem = c_;
    std::size_t dd = divisor.c_.size() - 1;
    std::vector<Integer> quot(rem.size() - dd);
    for (std::size_t i = quot.size(); i-- > 0;) {
        Integer q = rem[i + dd];
        quot[i] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) {
            mpz_submul(rem[i + j].get_mpz_t(), q.get_mpz_t(), divisor.c_[j].get_mpz_t());
        }
    }
    for (std::size_t i = 0; i < dd; ++i) {
        if (rem[i] != 0) return std::nullopt;
    }
    return Poly(std::move(quot));
}

std::optional<Poly> Poly::exact_div_scalar(const Integer& m) const {
    std::vector<Integer> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (mpz_divisible_p(c_[i].get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
        mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), m.get_mpz_t());
    }
    return Poly(std::move(out));
}

bool Poly::divisible_by(const Integer& d) const {
    return std::all_of(c_.begin(), c_.end(), [&](const Integer& c) {
        return mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()) != 0;
    });
}

Rational Poly::eval(const Rational& x) const {
    if (c_.empty()) return Rational(0);
    // Homogenized Horner: sum c_i w^i z^(deg-i) over z^deg, with x = w/z.
    const Integer w = x.num();
    const Integer z = x.den();
    Integer acc = c_.back();
    Integer zpow = 1;
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
        zpow *= z;
        acc *= w;
        mpz_addmul(acc.get_mpz_t(), c_[i].get_mpz_t(), zpow.get_mpz_t());
    }
    return Rational(acc, zpow);
}

// ---------------------------------------------------------------- CurveRing

CurveRing::CurveRing(const WeierstrassCurve& curve)
    : cubic_(std::vector<Integer>{curve.b(), curve.a(), Integer(0), Integer(1)}) {}

CurvePoly CurveRing::add(const CurvePoly& p, const CurvePoly& q) const {
    return {p.f + q.f, p.g + q.g};
}

CurvePoly CurveRing::sub(const CurvePoly& p, const CurvePoly& q) const {
    return {p.f - q.f, p.g - q.g};
}

CurvePoly CurveRing::mul(const CurvePoly& p, const CurvePoly& q) const {
    // (f1 + y g1)(f2 + y g2) = f1 f2 + y^2 g1 g2 + y (f1 g2 + g1 f2)
    Poly f = p.f * q.f;
    if (!p.g.is_zero() && !q.g.is_zero()) f += cubic_ * (p.g * q.g);
    Poly g = p.f * q.g + p.g * q.f;
    return {std::move(f), std::move(g)};
}

CurvePoly CurveRing::div_by_y(const CurvePoly& p, const Integer& m, const std::string& what) const {
    // (f + y g) / (m y) = g/m + y f/(m y^2)
    auto g_part = p.g.exact_div_scalar(m);
    auto f_scaled = p.f.exact_div_scalar(m);
    std::optional<Poly> f_part;
    if (f_scaled) f_part = f_scaled->exact_div_monic(cubic_);
    if (!g_part || !f_part) {
        throw ConsistencyError(what + ": division by " + to_string(m) + "y is not exact");
    }
    return {std::move(*g_part), std::move(*f_part)};
}

Rational CurveRing::eval(const CurvePoly& p, const Rational& x, const Rational& y) const {
    Rational v = p.f.eval(x);
    if (!p.g.is_zero()) v += y * p.g.eval(x);
    return v;
}

// ---------------------------------------------------------------- explicit forms

Poly psi3_explicit(const WeierstrassCurve& curve) {
    const Integer& a = curve.a();
    const Integer& b = curve.b();
    return Poly({Integer(-a * a), Integer(12 * b), Integer(6 * a), Integer(0), Integer(3)});
}

Poly psi4_over_y_explicit(const WeierstrassCurve& curve) {
    const Integer& a = curve.a();
    const Integer& b = curve.b();
    return Poly({Integer(-4 * a * a * a - 32 * b * b), Integer(-16 * a * b),
                 Integer(-20 * a * a), Integer(80 * b), Integer(20 * a), Integer(0), Integer(4)});
}

Poly x_triple_numerator(const WeierstrassCurve& curve) {
    const Integer& a = curve.a();
    const Integer& b = curve.b();
    Integer a2 = a * a;
    Integer a3 = a2 * a;
    Integer b2 = b * b;
    return Poly({
        Integer(8 * b * (a3 + 8 * b2)),   // x^0
        Integer(3 * a * (3 * a3 + 32 * b2)),
        Integer(48 * a2 * b),
        Integer(12 * (3 * a3 + 4 * b2)),
        Integer(-24 * a * b),
        Integer(30 * a2),
        Integer(-96 * b),
        Integer(-12 * a),
        Integer(0),
        Integer(1),                        // x^9
    });
}

// ---------------------------------------------------------------- DivPolyCache

DivPolyCache::DivPolyCache(WeierstrassCurve curve) : curve_(std::move(curve)), ring_(curve_) {
    psi_.push_back({});                                     // psi_0 = 0
    psi_.push_back({Poly({Integer(1)}), Poly()});           // psi_1 = 1
    psi_.push_back({Poly(), Poly({Integer(2)})});           // psi_2 = 2y
    psi_.push_back({psi3_explicit(curve_), Poly()});
    psi_.push_back({Poly(), psi4_over_y_explicit(curve_)});
}

void DivPolyCache::fill_psi(long n) {
    while (static_cast<long>(psi_.size()) <= n) {
        const long m = static_cast<long>(psi_.size());
        const long j = m / 2;
        CurvePoly next;
        if (m % 2 == 1) {
            // psi_{2j+1} = psi_{j+2} psi_j^3 - psi_{j-1} psi_{j+1}^3, j >= 2
            next = ring_.sub(ring_.mul(psi_[j + 2], ring_.cube(psi_[j])),
                             ring_.mul(psi_[j - 1], ring_.cube(psi_[j + 1])));
        } else {
            // psi_{2j} = psi_j (psi_{j+2} psi_{j-1}^2 - psi_{j-2} psi_{j+1}^2) / 2y, j >= 3
            CurvePoly inner = ring_.sub(ring_.mul(psi_[j + 2], ring_.square(psi_[j - 1])),
                                        ring_.mul(psi_[j - 2], ring_.square(psi_[j + 1])));
            next = ring_.div_by_y(ring_.mul(psi_[j], inner), Integer(2),
                                  "psi_" + std::to_string(m));
        }
        psi_.push_back(std::move(next));
    }
}

const CurvePoly& DivPolyCache::psi(long n) {
    if (n < 0) throw ValidationError("psi: index must be >= 0, got " + std::to_string(n));
    std::lock_guard lock(mutex_);
    fill_psi(n);
    return psi_[n];
}

const Poly& DivPolyCache::psi_squared(long n) {
    std::lock_guard lock(mutex_);
    if (auto it = psi_sq_.find(n); it != psi_sq_.end()) return it->second;
    CurvePoly sq = ring_.square(psi(n));
    if (!sq.is_pure_x()) {
        throw ConsistencyError("psi_" + std::to_string(n) + "^2 has a nonzero y-part");
    }
    return psi_sq_.emplace(n, std::move(sq.f)).first->second;
}

const Poly& DivPolyCache::phi(long n) {
    if (n < 1) throw ValidationError("phi: index must be >= 1, got " + std::to_string(n));
    std::lock_guard lock(mutex_);
    if (auto it = phi_.find(n); it != phi_.end()) return it->second;
    CurvePoly x_poly{Poly({Integer(0), Integer(1)}), Poly()};
    CurvePoly value = ring_.sub(ring_.mul(x_poly, ring_.square(psi(n))),
                                ring_.mul(psi(n - 1), psi(n + 1)));
    if (!value.is_pure_x()) {
        throw ConsistencyError("phi_" + std::to_string(n) + " has a nonzero y-part");
    }
    return phi_.emplace(n, std::move(value.f)).first->second;
}

const CurvePoly& DivPolyCache::omega(long n) {
    if (n < 2) throw ValidationError("omega: index must be >= 2, got " + std::to_string(n));
    std::lock_guard lock(mutex_);
    if (auto it = omega_.find(n); it != omega_.end()) return it->second;
    CurvePoly numer = ring_.sub(ring_.mul(ring_.square(psi(n - 1)), psi(n + 2)),
                                ring_.mul(psi(n - 2), ring_.square(psi(n + 1))));
    CurvePoly value = ring_.div_by_y(numer, Integer(4), "omega_" + std::to_string(n));
    return omega_.emplace(n, std::move(value)).first->second;
}

// ---------------------------------------------------------------- point formulas

EPoint mul_via_divpolys(DivPolyCache& cache, long n, const EPoint& p) {
    if (n < 2) throw ValidationError("mul_via_divpolys: n must be >= 2");
    if (p.is_infinity()) throw ValidationError("mul_via_divpolys: point must be affine");
    if (!on_E(cache.curve(), p)) {
        throw ValidationError("mul_via_divpolys: point " + p.str() + " is not on the curve");
    }
    const CurveRing& ring = cache.ring();
    Rational psi_value = ring.eval(cache.psi(n), p.x(), p.y());
    if (psi_value.is_zero()) {
        throw TorsionDenominatorError("psi_" + std::to_string(n) + " vanishes at " + p.str() +
                                      ", so the point has order dividing " + std::to_string(n));
    }
    Rational psi_sq = psi_value * psi_value;
    Rational x = cache.phi(n).eval(p.x()) / psi_sq;
    Rational y = Rational(kOmegaSign) * ring.eval(cache.omega(n), p.x(), p.y()) /
                 (psi_sq * psi_value);
    return EPoint::affine(std::move(x), std::move(y));
}

EPoint double_closed_form(const WeierstrassCurve& curve, const EPoint& p) {
    if (p.is_infinity() || p.y().is_zero()) {
        throw ValidationError("double_closed_form: needs an affine point with y != 0");
    }
    const Integer& a = curve.a();
    const Integer& b = curve.b();
    Poly x_num({Integer(a * a), Integer(-8 * b), Integer(-2 * a), Integer(0), Integer(1)});
    Poly y_num({Integer(-a * a * a - 8 * b * b), Integer(-4 * a * b), Integer(-5 * a * a),
                Integer(20 * b), Integer(5 * a), Integer(0), Integer(1)});
    const Rational& y = p.y();
    Rational y2 = y * y;
    return EPoint::affine(x_num.eval(p.x()) / (Rational(4) * y2),
                          y_num.eval(p.x()) / (Rational(8) * y2 * y));
}

Rational x_triple_closed_form(const WeierstrassCurve& curve, const Rational& x) {
    Rational den = psi3_explicit(curve).eval(x);
    if (den.is_zero()) {
        throw TorsionDenominatorError("x_triple_closed_form: psi_3(" + x.str() +
                                      ") = 0, a 3-torsion x-coordinate");
    }
    return x_triple_numerator(curve).eval(x) / (den * den);
}

// ---------------------------------------------------------------- degree and divisibility checks

namespace {

Integer coeff_at(const Poly& p, long i) {
    return i < 0 ? Integer(0) : p.coeff(static_cast<std::size_t>(i));
}

bool divides(const Integer& d, const Integer& v) {
    return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace

DegreeFacts degree_facts(DivPolyCache& cache, long n) {
    if (n < 1) throw ValidationError("degree_facts: n must be >= 1");
    const long sq = n * n;
    const Poly& psi_sq = cache.psi_squared(n);
    const Poly& phi = cache.phi(n);
    DegreeFacts facts;
    facts.psi_sq_degree = psi_sq.degree();
    facts.psi_sq_leading = psi_sq.leading();
    facts.psi_sq_subleading = coeff_at(psi_sq, sq - 2);
    facts.phi_degree = phi.degree();
    facts.phi_leading = phi.leading();
    facts.phi_subleading = coeff_at(phi, sq - 1);
    return facts;
}

Poly psi_sq_tail(DivPolyCache& cache, long n) {
    const long sq = n * n;
    return cache.psi_squared(n) - Poly::monomial(Integer(sq), static_cast<std::size_t>(sq - 1));
}

Poly phi_tail(DivPolyCache& cache, long n) {
    return cache.phi(n) - Poly::monomial(Integer(1), static_cast<std::size_t>(n * n));
}

bool check_divisibility(DivPolyCache& cache, long n, const Integer& d) {
    if (n < 1) throw ValidationError("check_divisibility: n must be >= 1");
    if (d < 1) throw ValidationError("check_divisibility: d must be positive");
    const auto& curve = cache.curve();
    if (!divides(d, curve.a()) || !divides(d, curve.b())) {
        throw ValidationError("check_divisibility: " + to_string(d) + " does not divide both a = " +
                              to_string(curve.a()) + " and b = " + to_string(curve.b()));
    }
    return psi_sq_tail(cache, n).divisible_by(d) && phi_tail(cache, n).divisible_by(d);
}

ScaledIntegrality scaled_integrality(DivPolyCache& cache, long n, const Integer& w,
                                     const Integer& z, const Integer& d) {
    if (n < 2) throw ValidationError("scaled_integrality: n must be >= 2");
    if (w == 0 || z == 0) throw ValidationError("scaled_integrality: w and z must be nonzero");
    if (d < 1) throw ValidationError("scaled_integrality: d must be positive");
    const long sq = n * n;
    const Rational x(w, z);
    const Rational zr(z);
    Rational psi_term = zr.pow(static_cast<unsigned long>(sq - 3)) * psi_sq_tail(cache, n).eval(x);
    Rational phi_term = zr.pow(static_cast<unsigned long>(sq - 2)) * phi_tail(cache, n).eval(x);
    if (!psi_term.is_integer() || !phi_term.is_integer()) {
        throw ConsistencyError("scaled_integrality: non-integer scaled tail for n = " +
                               std::to_string(n) + " at x = " + x.str());
    }
    ScaledIntegrality out;
    out.psi_term = psi_term.num();
    out.phi_term = phi_term.num();
    const auto& curve = cache.curve();
    out.d_divides_curve = divides(d, curve.a()) && divides(d, curve.b());
    if (out.d_divides_curve) {
        out.psi_term_divisible = divides(d, out.psi_term);
        out.phi_term_divisible = divides(d, out.phi_term);
    }
    return out;
}

}  // namespace holm

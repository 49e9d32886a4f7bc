#pragma once

#include <deque>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "holm/curves.hpp"

namespace holm {

/// Univariate polynomial in x with integer coefficients, constant term first.
/// Stored without trailing zeros, so the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Integer> coeffs);
    static Poly monomial(const Integer& c, std::size_t degree);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    /// Coefficient of x^i (zero past the degree).
    Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    Integer leading() const { return c_.empty() ? Integer(0) : c_.back(); }
    const std::vector<Integer>& coeffs() const { return c_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Integer& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Integer& s) { return a *= s; }
    friend bool operator==(const Poly&, const Poly&) = default;

    /// Quotient by the monic `divisor`, or nullopt if the remainder is nonzero.
    std::optional<Poly> exact_div_monic(const Poly& divisor) const;
    /// Coefficientwise division by m, or nullopt if some coefficient is not a multiple.
    std::optional<Poly> exact_div_scalar(const Integer& m) const;
    /// True iff d divides every coefficient.
    bool divisible_by(const Integer& d) const;

    Rational eval(const Rational& x) const;

private:
    void trim();
    std::vector<Integer> c_;
};

/// f(x) + y g(x) in Z[x, y]/(y^2 - x^3 - a x - b).
struct CurvePoly {
    Poly f;
    Poly g;

    bool is_pure_x() const { return g.is_zero(); }
    friend bool operator==(const CurvePoly&, const CurvePoly&) = default;
};

/// Arithmetic in the coordinate ring of a curve; products reduce y^2 to the cubic.
class CurveRing {
public:
    explicit CurveRing(const WeierstrassCurve& curve);

    const Poly& cubic() const { return cubic_; }

    CurvePoly add(const CurvePoly& p, const CurvePoly& q) const;
    CurvePoly sub(const CurvePoly& p, const CurvePoly& q) const;
    CurvePoly mul(const CurvePoly& p, const CurvePoly& q) const;
    CurvePoly square(const CurvePoly& p) const { return mul(p, p); }
    CurvePoly cube(const CurvePoly& p) const { return mul(p, mul(p, p)); }

    /// p / (m y). Throws ConsistencyError when the division is not exact.
    CurvePoly div_by_y(const CurvePoly& p, const Integer& m, const std::string& what) const;

    /// Value at an affine point (x, y).
    Rational eval(const CurvePoly& p, const Rational& x, const Rational& y) const;

private:
    Poly cubic_;
};

/// y(nP) = kOmegaSign * omega_n(P) / psi_n(P)^3. Pinned by comparing the
/// n = 2 case against the closed-form doubling formula; see
/// `omega_sign_matches_doubling` in the unit tests.
inline constexpr int kOmegaSign = +1;

/// Memoized psi_n, phi_n, omega_n for one curve.
///
/// psi is filled bottom-up from the base cases psi_0..psi_4 and the two
/// recurrences (odd index for n >= 2, even index for n >= 3). Fills are
/// serialized internally; returned references stay valid for the cache's
/// lifetime, so concurrent readers are safe.
class DivPolyCache {
public:
    explicit DivPolyCache(WeierstrassCurve curve);

    const WeierstrassCurve& curve() const { return curve_; }
    const CurveRing& ring() const { return ring_; }

    const CurvePoly& psi(long n);
    /// psi_n^2 as a polynomial in x.
    const Poly& psi_squared(long n);
    /// x psi_n^2 - psi_{n-1} psi_{n+1}; n >= 1.
    const Poly& phi(long n);
    /// (psi_{n-1}^2 psi_{n+2} - psi_{n-2} psi_{n+1}^2) / 4y; n >= 2.
    const CurvePoly& omega(long n);

private:
    void fill_psi(long n);

    WeierstrassCurve curve_;
    CurveRing ring_;
    std::recursive_mutex mutex_;
    std::deque<CurvePoly> psi_;
    std::map<long, Poly> psi_sq_;
    std::map<long, Poly> phi_;
    std::map<long, CurvePoly> omega_;
};

/// psi_3 written out: 3x^4 + 6a x^2 + 12b x - a^2.
Poly psi3_explicit(const WeierstrassCurve& curve);
/// psi_4 / y written out: 4x^6 + 20a x^4 + 80b x^3 - 20a^2 x^2 - 16ab x - 4a^3 - 32b^2.
Poly psi4_over_y_explicit(const WeierstrassCurve& curve);

/// n*P as (phi_n/psi_n^2, omega_n/psi_n^3). Requires n >= 2 and affine P on
/// the curve; throws TorsionDenominatorError when psi_n(P) = 0.
EPoint mul_via_divpolys(DivPolyCache& cache, long n, const EPoint& p);

/// Closed-form doubling:
/// x(2P) = (x^4 - 2a x^2 - 8b x + a^2) / 4y^2,
/// y(2P) = (x^6 + 5a x^4 + 20b x^3 - 5a^2 x^2 - 4ab x - a^3 - 8b^2) / 8y^3.
/// Throws ValidationError for INFINITY or y = 0.
EPoint double_closed_form(const WeierstrassCurve& curve, const EPoint& p);

/// Numerator of the closed-form x(3P) (degree 9).
Poly x_triple_numerator(const WeierstrassCurve& curve);

/// x(3P) from the closed form over (3x^4 + 6a x^2 + 12b x - a^2)^2.
/// Throws TorsionDenominatorError when the denominator vanishes.
Rational x_triple_closed_form(const WeierstrassCurve& curve, const Rational& x);

/// Leading-term facts for psi_n^2 and phi_n.
struct DegreeFacts {
    long psi_sq_degree = 0;
    Integer psi_sq_leading;
    Integer psi_sq_subleading;  // coefficient of x^{n^2 - 2}
    long phi_degree = 0;
    Integer phi_leading;
    Integer phi_subleading;  // coefficient of x^{n^2 - 1}
};

DegreeFacts degree_facts(DivPolyCache& cache, long n);

/// psi_n^2 - n^2 x^{n^2-1} and phi_n - x^{n^2}.
Poly psi_sq_tail(DivPolyCache& cache, long n);
Poly phi_tail(DivPolyCache& cache, long n);

/// True iff d divides every coefficient of both tails. Requires d | a and d | b
/// (ValidationError otherwise).
bool check_divisibility(DivPolyCache& cache, long n, const Integer& d);

struct ScaledIntegrality {
    Integer psi_term;  // z^{n^2-3} (psi_n^2 - n^2 x^{n^2-1}) at x = w/z
    Integer phi_term;  // z^{n^2-2} (phi_n - x^{n^2}) at x = w/z
    bool d_divides_curve = false;  // d | a and d | b
    bool psi_term_divisible = false;
    bool phi_term_divisible = false;
};

/// Evaluates the scaled tails at x = w/z. Throws ConsistencyError if either
/// is not an integer. Divisibility flags are set only when d | a and d | b.
ScaledIntegrality scaled_integrality(DivPolyCache& cache, long n, const Integer& w,
                                     const Integer& z, const Integer& d);

}  // namespace holm

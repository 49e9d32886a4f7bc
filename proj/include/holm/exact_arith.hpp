#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "holm/errors.hpp"

namespace holm {

using Integer = mpz_class;

/// Default largest trial divisor used by factorization and primality checks.
inline constexpr std::uint64_t kDefaultTrialCeiling = 10'000'000;

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);

    /// Parses "n" or "n/d" (optional leading sign, decimal digits only).
    static Rational parse(std::string_view text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    /// "num/den", with "/den" omitted when den = 1.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    Rational pow(unsigned long e) const;

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

/// p-adic valuation: an integer, or INFINITE for v_p(0).
class Valuation {
public:
    explicit Valuation(long v) : value_(v) {}
    static Valuation infinite() { return Valuation(); }

    bool is_infinite() const { return !value_.has_value(); }
    long value() const;
    std::string str() const { return is_infinite() ? "inf" : std::to_string(*value_); }

    friend bool operator==(const Valuation&, const Valuation&) = default;
    // INFINITE compares greater than every finite value.
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

private:
    Valuation() = default;
    std::optional<long> value_;
};

struct PrimePower {
    Integer prime;
    unsigned long exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

std::string to_string(const Integer& v);

bool is_prime(const Integer& n, std::uint64_t ceiling = kDefaultTrialCeiling);

/// v_p(x). Throws ValidationError when p is not prime.
Valuation vp(const Rational& x, const Integer& p);

/// Trial-division factorization; primes strictly increasing.
/// Throws ValidationError for n <= 0 and CapacityError when a trial divisor
/// above `ceiling` would be needed.
std::vector<PrimePower> prime_factorize(const Integer& n,
                                        std::uint64_t ceiling = kDefaultTrialCeiling);

bool is_squarefree(const Integer& n, std::uint64_t ceiling = kDefaultTrialCeiling);

/// Nonnegative square root when n is a perfect square.
std::optional<Integer> is_perfect_square(const Integer& n);

/// All y >= 1 with y^2 | n (n != 0), ascending.
std::vector<Integer> square_divisor_roots(const Integer& n,
                                          std::uint64_t ceiling = kDefaultTrialCeiling);

/// Parses a decimal integer with optional sign. Throws ValidationError.
Integer parse_integer(std::string_view text);

}  // namespace holm

#include "holm/exact_arith.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace holm {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

}  // namespace

std::string to_string(const Integer& v) { return v.get_str(10); }

Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (!all_digits(digits)) {
        throw ValidationError("not an integer: '" + std::string(text) + "'");
    }
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    return Integer(s, 10);
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
        throw ValidationError("bad denominator in '" + std::string(text) + "'");
    }
    Integer den(std::string(den_text), 10);
    if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str(10);
    return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(unsigned long e) const {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
    return Rational(n, d);
}

long Valuation::value() const {
    if (!value_) throw std::logic_error("value() of infinite valuation");
    return *value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) {
        return a.is_infinite() <=> b.is_infinite();
    }
    return *a.value_ <=> *b.value_;
}

bool is_prime(const Integer& n, std::uint64_t ceiling) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), 2) != 0) return false;
    for (unsigned long d = 3;; d += 2) {
        if (Integer(d) * d > n) return true;
        if (d > ceiling) {
            throw CapacityError("primality of " + to_string(n) +
                                " needs trial divisors above " + std::to_string(ceiling));
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) return false;
    }
}

namespace {

long remove_factor(Integer& v, const Integer& p) {
    if (v == 0) return 0;
    return static_cast<long>(mpz_remove(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace

Valuation vp(const Rational& x, const Integer& p) {
    if (!is_prime(p)) throw ValidationError("vp: " + to_string(p) + " is not prime");
    if (x.is_zero()) return Valuation::infinite();
    Integer num = x.num();
    Integer den = x.den();
    return Valuation(remove_factor(num, p) - remove_factor(den, p));
}

std::vector<PrimePower> prime_factorize(const Integer& n, std::uint64_t ceiling) {
    if (n <= 0) throw ValidationError("prime_factorize: n must be positive, got " + to_string(n));
    std::vector<PrimePower> out;
    Integer rest = n;
    auto take = [&](unsigned long d) {
        unsigned long e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
            ++e;
        }
        if (e > 0) out.push_back({Integer(d), e});
    };
    take(2);
    for (unsigned long d = 3; Integer(d) * d <= rest; d += 2) {
        if (d > ceiling) {
            throw CapacityError("prime_factorize: cofactor " + to_string(rest) +
                                " needs trial divisors above " + std::to_string(ceiling));
        }
        take(d);
    }
    if (rest > 1) out.push_back({rest, 1});
    return out;
}

bool is_squarefree(const Integer& n, std::uint64_t ceiling) {
    if (n <= 0) throw ValidationError("is_squarefree: n must be positive, got " + to_string(n));
    auto factors = prime_factorize(n, ceiling);
    return std::all_of(factors.begin(), factors.end(),
                       [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::optional<Integer> is_perfect_square(const Integer& n) {
    if (n < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

std::vector<Integer> square_divisor_roots(const Integer& n, std::uint64_t ceiling) {
    if (n == 0) throw ValidationError("square_divisor_roots: n must be nonzero");
    Integer mag = abs(n);
    std::vector<Integer> roots{Integer(1)};
    for (const auto& [p, e] : prime_factorize(mag, ceiling)) {
        std::vector<Integer> next;
        for (const auto& r : roots) {
            Integer term = r;
            for (unsigned long i = 0; i <= e / 2; ++i) {
                next.push_back(term);
                term *= p;
            }
        }
        roots = std::move(next);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace holm

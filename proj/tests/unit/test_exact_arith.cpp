#include <doctest.h>

#include <random>

#include "holm/exact_arith.hpp"

using namespace holm;

TEST_CASE("vp examples") {
    CHECK(vp(Rational(1, 4), 2) == Valuation(-2));
    CHECK(vp(Rational(18), 3) == Valuation(2));
    CHECK(vp(Rational(7), 5) == Valuation(0));
    CHECK(vp(Rational(0), 3).is_infinite());
    CHECK(vp(Rational(-50, 27), 5) == Valuation(2));
    CHECK(vp(Rational(-50, 27), 3) == Valuation(-3));
}

TEST_CASE("vp rejects non-primes") {
    CHECK_THROWS_AS(vp(Rational(12), 4), ValidationError);
    CHECK_THROWS_AS(vp(Rational(12), 1), ValidationError);
    CHECK_THROWS_AS(vp(Rational(12), -3), ValidationError);
}

TEST_CASE("infinite valuation orders above every finite one") {
    CHECK(Valuation::infinite() > Valuation(1000));
    CHECK(Valuation(-3) < Valuation(2));
    CHECK(Valuation::infinite() == Valuation::infinite());
    CHECK_THROWS(Valuation::infinite().value());
}

TEST_CASE("is_squarefree") {
    CHECK(is_squarefree(6));
    CHECK_FALSE(is_squarefree(12));
    CHECK(is_squarefree(1));
    CHECK(is_squarefree(30030));
    CHECK_FALSE(is_squarefree(49 * 3));
    CHECK_THROWS_AS(is_squarefree(0), ValidationError);
    CHECK_THROWS_AS(is_squarefree(-6), ValidationError);
}

TEST_CASE("is_perfect_square") {
    CHECK(is_perfect_square(144) == Integer(12));
    CHECK_FALSE(is_perfect_square(145));
    CHECK(is_perfect_square(0) == Integer(0));
    CHECK_FALSE(is_perfect_square(-4));
    Integer big = Integer("123456789012345678901234567890");
    CHECK(is_perfect_square(Integer(big * big)) == big);
}

TEST_CASE("prime_factorize examples") {
    CHECK(prime_factorize(12) == std::vector<PrimePower>{{2, 2}, {3, 1}});
    CHECK(prime_factorize(1).empty());
    CHECK(prime_factorize(97) == std::vector<PrimePower>{{97, 1}});
    CHECK_THROWS_AS(prime_factorize(0), ValidationError);
    CHECK_THROWS_AS(prime_factorize(-12), ValidationError);
}

TEST_CASE("prime_factorize ceiling is loud") {
    // 1000003 * 1000033, both prime; a ceiling of 1000 cannot reach them.
    Integer n = Integer(1000003) * 1000033;
    CHECK_THROWS_AS(prime_factorize(n, 1000), CapacityError);
    CHECK(prime_factorize(n).size() == 2);
}

TEST_CASE("prime_factorize recomposes (sampled 1..1e6)") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> dist(1, 1'000'000);
    for (int i = 0; i < 2000; ++i) {
        long n = i < 200 ? i + 1 : dist(rng);
        Integer prod = 1;
        Integer last = 1;
        for (const auto& [p, e] : prime_factorize(n)) {
            CHECK(p > last);
            CHECK(is_prime(p));
            last = p;
            for (unsigned long j = 0; j < e; ++j) prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("square_divisor_roots") {
    // 62208 = 2^8 3^5: y = 2^i 3^j with i <= 4, j <= 2.
    auto roots = square_divisor_roots(-62208);
    CHECK(roots.size() == 15);
    for (const auto& y : roots) CHECK(62208 % (y * y) == 0);
    CHECK(roots.front() == 1);
    CHECK(roots.back() == 144);
}

TEST_CASE("rational normalization and printing") {
    Rational r(Integer(6), Integer(-8));
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(r.str() == "-3/4");
    CHECK(Rational(10, 5).str() == "2");
    CHECK(Rational::parse("-12/16") == Rational(-3, 4));
    CHECK(Rational::parse("+7").str() == "7");
    CHECK_THROWS_AS(Rational::parse("1/0"), ValidationError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ValidationError);
    CHECK_THROWS_AS(Rational::parse("3/-4"), ValidationError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("parse then print is the identity on reduced fractions") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1'000'000'000, 1'000'000'000);
    std::uniform_int_distribution<long> den(1, 1'000'000'000);
    for (int i = 0; i < 500; ++i) {
        Rational r(Integer(num(rng)), Integer(den(rng)));
        CHECK(Rational::parse(r.str()) == r);
        CHECK(Rational::parse(r.str()).str() == r.str());
    }
}

TEST_CASE("valuation is multiplicative and ultrametric") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> dist(-5000, 5000);
    auto nonzero = [&] {
        long v = 0;
        while (v == 0) v = dist(rng);
        return v;
    };
    for (int i = 0; i < 400; ++i) {
        Rational x(Integer(nonzero()), Integer(std::abs(nonzero())));
        Rational y(Integer(nonzero()), Integer(std::abs(nonzero())));
        for (long p : {2L, 3L, 5L, 7L}) {
            long vx = vp(x, p).value();
            long vy = vp(y, p).value();
            CHECK(vp(x * y, p).value() == vx + vy);
            CHECK(vp(x / y, p).value() == vx - vy);
            if (vx != vy) CHECK(vp(x + y, p).value() == std::min(vx, vy));
        }
    }
}

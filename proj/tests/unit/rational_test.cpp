// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#include "qfrac/rational.hpp"

#include <doctest.h>

#include "qfrac/errors.hpp"
#include "qfrac/sampling.hpp"
#include "test_rng.hpp"

using namespace qfrac;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(3, -6).denominator_str() == "2"); // denominator stays positive
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("strict parsing") {
    CHECK(Rational::parse("1/3") == Rational(1, 3));
    CHECK(Rational::parse("-7/2") == Rational(-7, 2));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational::parse("-0/9") == Rational(0));

    CHECK(!Rational::parse("0.333"));
    CHECK(!Rational::parse("1e3"));
    CHECK(!Rational::parse("1/0"));
    CHECK(!Rational::parse(""));
    CHECK(!Rational::parse("-"));
    CHECK(!Rational::parse("1/"));
    CHECK(!Rational::parse("/2"));
    CHECK(!Rational::parse(" 1/2"));
    CHECK(!Rational::parse("1 /2"));
    CHECK(!Rational::parse("1/2/3"));
    CHECK(!Rational::parse("1/-2"));

    CHECK_THROWS_AS(Rational::parse_or_throw("0.5"), DomainError);
}

TEST_CASE("exact arithmetic examples") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 3) / Rational(1, 6) == Rational(2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK(abs(Rational(-5, 3)) == Rational(5, 3));
    CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("field laws on random values") {
    SplitMix64 rng(20260101);
    for (int t = 0; t < 500; ++t) {
        const Rational a = testing::random_rational(rng, 64);
        const Rational b = testing::random_rational(rng, 64);
        const Rational c = testing::random_rational(rng, 64);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a + b) - b == a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("string round-trip") {
    SplitMix64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const Rational a = testing::random_rational(rng, 64);
        CHECK(Rational::parse(a.str()) == a);
    }
}

TEST_CASE("integer powers") {
    CHECK(pow_int(Rational(1, 2), 0) == Rational(1));
    CHECK(pow_int(Rational(1, 2), 3) == Rational(1, 8));
    CHECK(pow_int(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow_int(Rational(0), 0) == Rational(1));
    CHECK(pow_int(Rational(0), 5) == Rational(0));
    CHECK_THROWS_AS(pow_int(Rational(0), -1), DomainError);

    SplitMix64 rng(99);
    for (int t = 0; t < 100; ++t) {
        const Rational a = testing::random_rational(rng, 8, /*nonzero=*/true);
        const long e = static_cast<long>(rng.next_below(17)) - 8;
        Rational expected(1);
        for (long i = 0; i < (e < 0 ? -e : e); ++i) expected *= a;
        if (e < 0) expected = Rational(1) / expected;
        CHECK(pow_int(a, e) == expected);
    }
}

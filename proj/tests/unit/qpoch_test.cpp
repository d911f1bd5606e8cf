// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#include "qfrac/qpoch.hpp"

#include <doctest.h>

#include "qfrac/sampling.hpp"
#include "series_oracles.hpp"
#include "test_rng.hpp"

using namespace qfrac;

TEST_CASE("pochhammer basics") {
    CHECK(pochhammer(Rational(7, 3), Rational(-2), 0) == Rational(1)); // empty product
    CHECK(pochhammer(Rational(1), Rational(1, 2), 3) == Rational(0)); // first factor 1-1
    // (1/3;1/2)_2 = (1 - 1/3)(1 - 1/6) = (2/3)(5/6)
    CHECK(pochhammer(Rational(1, 3), Rational(1, 2), 2) == Rational(5, 9));
}

TEST_CASE("pochhammer against the literal definition") {
    SplitMix64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const Rational a = testing::random_rational(rng, 8);
        const Rational q = testing::random_rational(rng, 8);
        const int n = static_cast<int>(rng.next_below(12));
        CHECK(pochhammer(a, q, n) == testing::poch_by_definition(a, q, n));
    }
}

TEST_CASE("pochhammer recurrence up to n = 64") {
    SplitMix64 rng(12);
    for (int t = 0; t < 8; ++t) {
        const Rational a = testing::random_rational(rng, 6);
        const Rational q = testing::random_rational(rng, 6);
        for (int n = 0; n <= 64; ++n) {
            CHECK(pochhammer(a, q, n + 1) ==
                  pochhammer(a, q, n) * (Rational(1) - a * pow_int(q, n)));
        }
    }
}

TEST_CASE("contraction (y;q)_{n+1} = (1-y) (yq;q)_n") {
    SplitMix64 rng(13);
    for (int t = 0; t < 60; ++t) {
        const Rational y = testing::random_rational(rng, 10);
        const Rational q = testing::random_rational(rng, 10);
        const int n = static_cast<int>(rng.next_below(20));
        CHECK(pochhammer(y, q, n + 1) == (Rational(1) - y) * pochhammer(y * q, q, n));
    }
}

TEST_CASE("prefix table matches pointwise evaluation") {
    SplitMix64 rng(14);
    const Rational a = testing::random_rational(rng, 10);
    const Rational q = testing::random_rational(rng, 10);
    const auto table = pochhammer_table(a, q, 24);
    REQUIRE(table.size() == 25);
    for (int n = 0; n <= 24; ++n) {
        CHECK(table[static_cast<std::size_t>(n)] == pochhammer(a, q, n));
    }
}

TEST_CASE("binom2") {
    CHECK(binom2(0) == 0);
    CHECK(binom2(1) == 0);
    CHECK(binom2(4) == 6);
    for (long k = 0; k <= 40; ++k) {
        long sum = 0;
        for (long j = 0; j < k; ++j) sum += j;
        CHECK(binom2(k) == sum);
    }
}

TEST_CASE("cross_poch basics") {
    CHECK(cross_poch(Rational(9), Rational(-4), Rational(7), 1) == Rational(1)); // empty
    CHECK(cross_poch(Rational(1, 3), Rational(1, 5), Rational(1, 2), 2) == Rational(-2, 15));
    CHECK(cross_poch(Rational(1, 3), Rational(1, 5), Rational(1, 2), 3) == Rational(-1, 225));
}

TEST_CASE("cross_poch recurrence") {
    SplitMix64 rng(15);
    for (int t = 0; t < 60; ++t) {
        const Rational x = testing::random_rational(rng, 10);
        const Rational y = testing::random_rational(rng, 10);
        const Rational q = testing::random_rational(rng, 10);
        const int k = 1 + static_cast<int>(rng.next_below(16));
        CHECK(cross_poch(x, y, q, k + 1) ==
              cross_poch(x, y, q, k) * (y - x * pow_int(q, k - 1)));
    }
}

TEST_CASE("cross_poch equals y^{k-1} (x/y;q)_{k-1} for y != 0") {
    SplitMix64 rng(16);
    for (int t = 0; t < 60; ++t) {
        const Rational x = testing::random_rational(rng, 10);
        const Rational y = testing::random_rational(rng, 10, /*nonzero=*/true);
        const Rational q = testing::random_rational(rng, 10);
        const int k = 1 + static_cast<int>(rng.next_below(12));
        CHECK(cross_poch(x, y, q, k) ==
              pow_int(y, k - 1) * pochhammer(x / y, q, k - 1));
    }
}

TEST_CASE("cross_poch is defined at y = 0") {
    // Q_k|_{y=0} = prod_{j=0}^{k-2} (-x q^j) = (-x)^{k-1} q^C(k-1,2)
    SplitMix64 rng(17);
    for (int t = 0; t < 40; ++t) {
        const Rational x = testing::random_rational(rng, 10);
        const Rational q = testing::random_rational(rng, 10);
        const int k = 1 + static_cast<int>(rng.next_below(10));
        CHECK(cross_poch(x, Rational(0), q, k) ==
              pow_int(-x, k - 1) * pow_int(q, binom2(k - 1)));
    }
}

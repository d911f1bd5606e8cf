// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#include "qfrac/builders.hpp"

#include <doctest.h>

#include "qfrac/cfrac.hpp"
#include "qfrac/errors.hpp"
#include "qfrac/sampling.hpp"

using namespace qfrac;

namespace {

// The worked point used throughout: q = 1/2, x = 1/3, y = 1/5.
ParamPoint worked_point() {
    return ParamPoint{Rational(1, 2), Rational(1, 3), Rational(1, 5), 0};
}

} // namespace

TEST_CASE("g has constant term 1 and known low-order coefficients") {
    const Series g = build_g(worked_point(), 2);
    CHECK(g.coeff(0) == Rational(1));
    CHECK(g.coeff(1) == Rational(6, 5));
    CHECK(g.coeff(2) == Rational(162, 125));
    CHECK(g.valid_order() == 2);
}

TEST_CASE("g at x = y is the geometric series") {
    const ParamPoint pt{Rational(1, 3), Rational(2, 7), Rational(2, 7), 0};
    const Series g = build_g(pt, 6);
    for (int n = 0; n <= 6; ++n) CHECK(g.coeff(n) == Rational(1));
}

TEST_CASE("g names the vanishing denominator factor") {
    // 1 - x q^2 = 0 at x = 4, q = 1/2
    const ParamPoint pt{Rational(1, 2), Rational(4), Rational(1, 5), 0};
    CHECK_THROWS_WITH_AS(build_g(pt, 4), doctest::Contains("(1 - x*q^2)"), InadmissibleError);
    CHECK(build_g(pt, 2).valid_order() == 2); // order below the pole is fine
}

TEST_CASE("initial pair s0, s1") {
    const auto [s0, s1] = build_s0_s1(worked_point(), 2);
    CHECK(s0 == Series::unit(2));
    CHECK(s1.coeff(0) == Rational(6, 5));    // (1-1/5)/(1-1/3)
    CHECK(s1.coeff(1) == Rational(162, 125)); // (4/5)(9/10) / ((2/3)(5/6))
}

TEST_CASE("even member at k = 1") {
    const Series s2 = build_s_even(1, worked_point(), 1);
    CHECK(s2.coeff(0) == Rational(-27, 25));
    CHECK(s2.coeff(1) == Rational(-1539, 1375));
}

TEST_CASE("even member rejects k = 0") {
    CHECK_THROWS_AS(build_s_even(0, worked_point(), 3), DomainError);
}

TEST_CASE("even member sign follows (-1)^k where every product is positive") {
    // at the worked point every Pochhammer factor is positive, so the
    // constant term (-1)^k q^C(k,2) (yq;q)_k / (xq^k;q)_k has sign (-1)^k
    for (int k = 1; k <= 4; ++k) {
        const Series s = build_s_even(k, worked_point(), 0);
        CHECK(s.coeff(0).sign() == (k % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("odd member at k = 0 is exactly s1") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
        const ParamPoint pt = sample_point(seed, 24);
        const auto [s0, s1] = build_s0_s1(pt, 12);
        const Series odd0 = build_s_odd(0, pt, 12);
        CHECK(odd0 == s1);
    }
}

TEST_CASE("odd member constant terms at the worked point") {
    CHECK(build_s_odd(0, worked_point(), 0).coeff(0) == Rational(6, 5));
    // prefactor (1-y) Q_2 (-1) q = 4/75 times (q;q)_1/(x;q)_3 = (1/2)/(55/108)
    CHECK(build_s_odd(1, worked_point(), 0).coeff(0) == Rational(72, 1375));
}

TEST_CASE("recursion identity ties the builders together") {
    const ParamPoint pt = worked_point();
    const int order = 8;
    const auto [s0, s1] = build_s0_s1(pt, order);

    // base step: z s_2 = s_0 - a_2 s_1
    const Series s2 = build_s_even(1, pt, order);
    CHECK(eq_to_order(shift_up(s2), s0 - closed_a(2, pt) * s1, order));

    // odd step k = 1: z s_3 = s_1 - a_3 s_2
    const Series s3 = build_s_odd(1, pt, order);
    CHECK(eq_to_order(shift_up(s3), s1 - closed_a(3, pt) * s2, order));

    // even step k = 1: z s_4 = s_2 - a_4 s_3
    const Series s4 = build_s_even(2, pt, order);
    CHECK(eq_to_order(shift_up(s4), s2 - closed_a(4, pt) * s3, order));
}

TEST_CASE("series descriptor dispatch") {
    const ParamPoint pt = worked_point();
    CHECK(build({SeriesSpec::Kind::g, 0, pt, 4}) == build_g(pt, 4));
    CHECK(build({SeriesSpec::Kind::s_even, 2, pt, 4}) == build_s_even(2, pt, 4));
    CHECK(build({SeriesSpec::Kind::s_odd, 1, pt, 4}) == build_s_odd(1, pt, 4));
}

TEST_CASE("generalized g reduces to g") {
    const ParamPoint pt = sample_point(5, 16);
    const Series base = build_g(pt, 10);
    CHECK(build_g_generalized({}, {}, pt, 10) == base);
    // a (0;q)_n factor is identically 1
    const std::vector<Rational> zero{Rational(0)};
    CHECK(build_g_generalized(zero, {}, pt, 10) == base);
    CHECK(build_g_generalized({}, zero, pt, 10) == base);
}

TEST_CASE("generalized g names vanishing extra denominator factors") {
    const ParamPoint pt = worked_point();
    const std::vector<Rational> bad{Rational(4)}; // 1 - 4 q^2 = 0 at q = 1/2
    CHECK_THROWS_WITH_AS(build_g_generalized({}, bad, pt, 4),
                         doctest::Contains("(1 - v1*q^2)"), InadmissibleError);
}

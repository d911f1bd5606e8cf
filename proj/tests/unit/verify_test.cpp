// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#include "qfrac/verify.hpp"

#include <doctest.h>

#include <map>
#include <set>

#include "qfrac/builders.hpp"
#include "qfrac/errors.hpp"
#include "qfrac/sampling.hpp"

using namespace qfrac;

namespace {

ParamPoint worked_point() {
    return ParamPoint{Rational(1, 2), Rational(1, 3), Rational(1, 5), 0};
}

} // namespace

TEST_CASE("check_theorem passes at the worked point") {
    const VerifyReport rep = check_theorem(worked_point(), 3, 6);
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() == 9); // 3 coefficient + 3 agreement + 3 sharpness

    std::set<std::pair<std::string, int>> seen;
    for (const auto& c : rep.checks) {
        CHECK(seen.insert({c.check, c.index}).second); // each (check, index) once
    }
}

TEST_CASE("check_theorem rejects y = 1 naming the factor") {
    ParamPoint pt = worked_point();
    pt.y = Rational(1);
    CHECK_THROWS_WITH_AS(check_theorem(pt, 2, 4), doctest::Contains("(1 - y)"),
                         InadmissibleError);
}

TEST_CASE("check_theorem handles the geometric x = y point at small depth") {
    ParamPoint pt = worked_point();
    pt.y = pt.x;
    const VerifyReport rep = check_theorem(pt, 3, 6);
    CHECK(rep.all_pass());
    // a_4 needs Q_2 = y - x, which vanishes here: the fraction terminates,
    // convergent 3 reproduces z/g exactly, and the sharpness entry says so.
    bool noted = false;
    for (const auto& c : rep.checks) {
        if (c.check == "convergent_next_differs" && c.index == 3) {
            noted = !c.note.empty();
        }
    }
    CHECK(noted);
    CHECK_THROWS_AS(check_theorem(pt, 4, 6), InadmissibleError);
}

TEST_CASE("check_theorem passes at sampled points") {
    for (std::uint64_t seed : {21u, 22u, 23u}) {
        const ParamPoint pt = sample_point(seed, 16);
        const VerifyReport rep = check_theorem(pt, 8, 10);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("check_recursion passes at the worked point and counts its steps") {
    const VerifyReport rep = check_recursion(worked_point(), 4, 12);
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() == 9); // i = 2..10: K+1 even steps, K odd steps

    int even = 0, odd = 0;
    for (const auto& c : rep.checks) {
        if (c.check == "recursion_even") ++even;
        if (c.check == "recursion_odd") ++odd;
    }
    CHECK(even == 5);
    CHECK(odd == 4);
}

TEST_CASE("check_recursion passes at sampled points") {
    for (std::uint64_t seed : {31u, 32u, 33u}) {
        const ParamPoint pt = sample_point(seed, 2 * 4 + 8 + 2);
        CHECK(check_recursion(pt, 3, 8).all_pass());
    }
}

TEST_CASE("check_specializations asserts the sign pattern and flags deviations") {
    const auto reports = check_specializations(9, 9, 424242, 2);
    REQUIRE(reports.size() == 4); // 2 y=0 points then 2 x=0 points

    for (int r = 0; r < 2; ++r) {
        const VerifyReport& rep = reports[static_cast<std::size_t>(r)];
        CHECK(rep.point.y.is_zero());
        CHECK(rep.all_pass());
        std::map<int, std::string> notes;
        for (const auto& c : rep.checks) {
            if (c.check == "y0_special_ratio") notes[c.index] = c.note;
        }
        // k = 1 pair (a_2, a_3): ratio 1; k = 2 pair (a_4, a_5): ratio -1
        CHECK(notes.at(2) == "ratio=1");
        CHECK(notes.at(3) == "ratio=1");
        CHECK(notes.at(4) == "ratio=-1 (differs from general form)");
        CHECK(notes.at(5) == "ratio=-1 (differs from general form)");
        CHECK(notes.at(6) == "ratio=1");
        CHECK(notes.at(7) == "ratio=1");
        CHECK(notes.at(8) == "ratio=-1 (differs from general form)");
        CHECK(notes.at(9) == "ratio=-1 (differs from general form)");
    }
    for (int r = 2; r < 4; ++r) {
        const VerifyReport& rep = reports[static_cast<std::size_t>(r)];
        CHECK(rep.point.x.is_zero());
        CHECK(rep.all_pass());
    }
}

TEST_CASE("explore with no extra factors reproduces the theorem coefficients") {
    GeneralizedSpec spec;
    spec.point = worked_point();
    const auto rows = explore_generalized(spec, 5);
    REQUIRE(rows.size() == 5);
    const CfCoeffs closed = closed_coeffs(worked_point(), 5);
    for (const auto& row : rows) {
        REQUIRE(row.value.has_value());
        CHECK(*row.value == closed.a(row.index));
    }
}

TEST_CASE("explore emits whatever extraction yields off the base family") {
    GeneralizedSpec spec;
    spec.point = worked_point();
    spec.extra_num = {Rational(1, 7)};
    const auto rows = explore_generalized(spec, 6);
    CHECK(rows.size() >= 1);
    // deterministic: same call, same table
    const auto rows2 = explore_generalized(spec, 6);
    REQUIRE(rows.size() == rows2.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].index == rows2[i].index);
        CHECK(rows[i].value == rows2[i].value);
    }
}

TEST_CASE("numeric convergence study") {
    const auto rows = numeric_convergence_study(worked_point(), Rational(1, 10), 6, 20);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].m == 1);
    CHECK(rows[0].convergent_at_z == Rational(1, 10)); // C_1 = z/a_1
    for (const auto& row : rows) {
        CHECK(row.cf_error >= Rational(0));
        CHECK(row.taylor_error >= Rational(0));
    }

    // z = 0: every convergent is 0 and both error columns vanish
    const auto at0 = numeric_convergence_study(worked_point(), Rational(0), 4, 10);
    for (const auto& row : at0) {
        CHECK(row.convergent_at_z == Rational(0));
        CHECK(row.cf_error == Rational(0));
        CHECK(row.taylor_error == Rational(0));
    }

    ParamPoint big = worked_point();
    big.q = Rational(3, 2);
    CHECK_THROWS_AS(numeric_convergence_study(big, Rational(1, 10), 4, 10), DomainError);
}

TEST_CASE("parallel point runner keeps index order and propagates errors") {
    auto fn = [](int i) {
        const ParamPoint pt = sample_point(static_cast<std::uint64_t>(i), 12);
        VerifyReport rep = check_theorem(pt, 4, 6);
        rep.seed = static_cast<std::uint64_t>(i);
        return rep;
    };
    const auto serial = run_point_checks(8, 1, fn);
    const auto parallel = run_point_checks(8, 4, fn);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].seed == parallel[i].seed);
        CHECK(serial[i].point.q == parallel[i].point.q);
        CHECK(serial[i].checks.size() == parallel[i].checks.size());
    }

    auto throwing = [](int i) -> VerifyReport {
        if (i == 3) throw DomainError("boom");
        return {};
    };
    CHECK_THROWS_AS(run_point_checks(6, 3, throwing), DomainError);
}

// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#include "qfrac/qpoch.hpp"

namespace qfrac {

Rational pochhammer(const Rational& a, const Rational& q, int n) {
    Rational acc(1);
    Rational qp(1); // q^j
    for (int j = 0; j < n; ++j) {
        acc *= Rational(1) - a * qp;
        qp *= q;
    }
    return acc;
}

std::vector<Rational> pochhammer_table(const Rational& a, const Rational& q, int n) {
    std::vector<Rational> table;
    table.reserve(static_cast<std::size_t>(n) + 1);
    Rational acc(1);
    Rational qp(1);
    table.push_back(acc);
    for (int j = 0; j < n; ++j) {
        acc *= Rational(1) - a * qp;
        qp *= q;
        table.push_back(acc);
    }
    return table;
}

long binom2(long k) {
    return k * (k - 1) / 2;
}

Rational cross_poch(const Rational& x, const Rational& y, const Rational& q, int k) {
    Rational acc(1);
    Rational qp(1);
    for (int j = 0; j <= k - 2; ++j) {
        acc *= y - x * qp;
        qp *= q;
    }
    return acc;
}

} // namespace qfrac

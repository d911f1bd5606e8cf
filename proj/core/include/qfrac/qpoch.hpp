// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#ifndef QFRAC_QPOCH_HPP
#define QFRAC_QPOCH_HPP

#include <vector>

#include "qfrac/rational.hpp"

namespace qfrac {

/// q-Pochhammer symbol (a;q)_n = (1-a)(1-aq)...(1-aq^{n-1}).
/// n = 0 gives the empty product 1. Total: never throws.
Rational pochhammer(const Rational& a, const Rational& q, int n);

/// Prefix table [(a;q)_0, (a;q)_1, ..., (a;q)_n], built in O(n).
std::vector<Rational> pochhammer_table(const Rational& a, const Rational& q, int n);

/// k(k-1)/2, the exponent of q attached to level k in the coefficient
/// closed forms.
long binom2(long k);

/// Q_k = prod_{j=0}^{k-2} (y - x q^j), with Q_1 = 1 (empty product).
/// Equals y^{k-1} * (x/y; q)_{k-1} when y != 0, but is defined for all y,
/// so y = 0 needs no special casing anywhere downstream.
Rational cross_poch(const Rational& x, const Rational& y, const Rational& q, int k);

} // namespace qfrac

#endif // QFRAC_QPOCH_HPP

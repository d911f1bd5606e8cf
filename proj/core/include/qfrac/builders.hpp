// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#ifndef QFRAC_BUILDERS_HPP
#define QFRAC_BUILDERS_HPP

#include <span>
#include <utility>

#include "qfrac/param_point.hpp"
#include "qfrac/series.hpp"

namespace qfrac {

/// g(z) = sum_{n>=0} (y;q)_n z^n / (x;q)_n, to the requested order.
/// Throws InadmissibleError naming the factor when some (1 - x q^j)
/// needed for a denominator vanishes.
Series build_g(const ParamPoint& pt, int order);

/// The pair that seeds coefficient extraction:
///   s0 = 1,   s1 = sum_{n>=0} (y;q)_{n+1} z^n / (x;q)_{n+1}.
/// s1 is (g - 1)/z, built directly from its own term formula.
std::pair<Series, Series> build_s0_s1(const ParamPoint& pt, int order);

/// The even-index member of the denominator family, for k >= 1:
///
///   s_{2k} = (-1)^k q^C(k,2) / (q;q)_{k-1}
///            * sum_{n>=0} z^n (q^{n+1};q)_{k-1} (yq;q)_{n+k} / (xq^k;q)_{n+k}.
///
/// k = 0 is rejected (DomainError): that member is the initial value
/// s_0 = 1, kept separate because the display above would need
/// (q;q)_{-1}.
Series build_s_even(int k, const ParamPoint& pt, int order);

/// The odd-index member, for k >= 0:
///
///   s_{2k+1} = (1-y) Q_{k+1} (-1)^k q^C(k+1,2)
///              * sum_{n>=0} z^n (q^{n+1};q)_k (yq^{k+1};q)_n / (x;q)_{n+2k+1},
///
/// where Q_{k+1} = cross_poch(x, y, q, k+1) = y^k (x/y;q)_k. k = 0
/// reproduces s1 of build_s0_s1 coefficient for coefficient.
Series build_s_odd(int k, const ParamPoint& pt, int order);

/// g with extra Pochhammer factors: term n carries an additional
/// prod_j (u_j;q)_n in the numerator and prod_j (v_j;q)_n in the
/// denominator. Used to probe how coefficient extraction behaves off the
/// base family.
Series build_g_generalized(std::span<const Rational> extra_num,
                           std::span<const Rational> extra_den,
                           const ParamPoint& pt, int order);

/// Descriptor of one named series of the family; build(spec) dispatches
/// to the constructors above (k is ignored for Kind::g).
struct SeriesSpec {
    enum class Kind { g, s_even, s_odd };
    Kind kind = Kind::g;
    int k = 0;
    ParamPoint point;
    int order = 0;
};

Series build(const SeriesSpec& spec);

} // namespace qfrac

#endif // QFRAC_BUILDERS_HPP

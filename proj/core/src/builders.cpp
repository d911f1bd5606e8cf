// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#include "qfrac/builders.hpp"

#include <string>
#include <vector>

#include "qfrac/errors.hpp"
#include "qfrac/qpoch.hpp"

namespace qfrac {

namespace {

void check_order(int order) {
    if (order < 0) throw OrderError("series order must be nonnegative, got " + std::to_string(order));
}

// Prefix table of (a q^off; q)_m for m <= n, where `a q^off` is described
// symbolically so a vanishing factor can be named as seen by the caller:
// factor j of the product is (1 - sym*q^(off+j)), or (1 - q^(off+j)) when
// sym is empty. Throws InadmissibleError at the first zero factor.
std::vector<Rational> checked_table(const Rational& a, int off, const std::string& sym,
                                    const Rational& q, int n, const ParamPoint& pt) {
    std::vector<Rational> table;
    table.reserve(static_cast<std::size_t>(n) + 1);
    Rational acc(1);
    Rational qp = pow_int(q, off);
    table.push_back(acc);
    for (int j = 0; j < n; ++j) {
        const Rational factor = Rational(1) - a * qp;
        if (factor.is_zero()) {
            const std::string power = "q^" + std::to_string(off + j);
            throw InadmissibleError(sym.empty() ? "(1 - " + power + ")"
                                                : "(1 - " + sym + "*" + power + ")",
                                    pt.str());
        }
        acc *= factor;
        qp *= q;
        table.push_back(acc);
    }
    return table;
}

} // namespace

Series build_g(const ParamPoint& pt, int order) {
    check_order(order);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = Rational(1);
    Rational qp(1); // q^{n-1}
    for (int n = 1; n <= order; ++n) {
        const Rational den = Rational(1) - pt.x * qp;
        if (den.is_zero()) {
            throw InadmissibleError("(1 - x*q^" + std::to_string(n - 1) + ")", pt.str());
        }
        c[static_cast<std::size_t>(n)] =
            c[static_cast<std::size_t>(n - 1)] * (Rational(1) - pt.y * qp) / den;
        qp *= pt.q;
    }
    return Series(std::move(c));
}

std::pair<Series, Series> build_s0_s1(const ParamPoint& pt, int order) {
    check_order(order);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    Rational qp(1); // q^n
    Rational term(1);
    for (int n = 0; n <= order; ++n) {
        const Rational den = Rational(1) - pt.x * qp;
        if (den.is_zero()) {
            throw InadmissibleError("(1 - x*q^" + std::to_string(n) + ")", pt.str());
        }
        term *= (Rational(1) - pt.y * qp) / den;
        c[static_cast<std::size_t>(n)] = term;
        qp *= pt.q;
    }
    return {Series::unit(order), Series(std::move(c))};
}

Series build_s_even(int k, const ParamPoint& pt, int order) {
    check_order(order);
    if (k < 1) {
        throw DomainError("s_even is defined for k >= 1; the k = 0 member is the"
                          " initial value s_0 = 1");
    }
    // (q^{n+1};q)_{k-1} is evaluated as (q;q)_{n+k-1} / (q;q)_n, so the
    // whole (q;q) family through n + k - 1 must be zero-free.
    const auto qq = checked_table(Rational(1), 1, "", pt.q, order + k - 1, pt);
    const auto yq = pochhammer_table(pt.y * pt.q, pt.q, order + k);
    const auto xk = checked_table(pt.x, k, "x", pt.q, order + k, pt);

    const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    const Rational prefactor = sign * pow_int(pt.q, binom2(k)) / qq[static_cast<std::size_t>(k - 1)];

    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        const Rational qfac = qq[static_cast<std::size_t>(n + k - 1)] / qq[static_cast<std::size_t>(n)];
        c[static_cast<std::size_t>(n)] =
            prefactor * qfac * yq[static_cast<std::size_t>(n + k)] / xk[static_cast<std::size_t>(n + k)];
    }
    return Series(std::move(c));
}

Series build_s_odd(int k, const ParamPoint& pt, int order) {
    check_order(order);
    if (k < 0) throw DomainError("s_odd needs k >= 0");
    const auto qq = checked_table(Rational(1), 1, "", pt.q, order + k, pt);
    const auto yk = pochhammer_table(pt.y * pow_int(pt.q, k + 1), pt.q, order);
    const auto xx = checked_table(pt.x, 0, "x", pt.q, order + 2 * k + 1, pt);

    const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    const Rational prefactor = (Rational(1) - pt.y) * cross_poch(pt.x, pt.y, pt.q, k + 1) *
                               sign * pow_int(pt.q, binom2(k + 1));

    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        const Rational qfac = qq[static_cast<std::size_t>(n + k)] / qq[static_cast<std::size_t>(n)];
        c[static_cast<std::size_t>(n)] =
            prefactor * qfac * yk[static_cast<std::size_t>(n)] / xx[static_cast<std::size_t>(n + 2 * k + 1)];
    }
    return Series(std::move(c));
}

Series build_g_generalized(std::span<const Rational> extra_num,
                           std::span<const Rational> extra_den,
                           const ParamPoint& pt, int order) {
    check_order(order);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = Rational(1);
    Rational qp(1); // q^{n-1}
    for (int n = 1; n <= order; ++n) {
        Rational num = Rational(1) - pt.y * qp;
        for (const Rational& u : extra_num) num *= Rational(1) - u * qp;

        Rational den = Rational(1) - pt.x * qp;
        if (den.is_zero()) {
            throw InadmissibleError("(1 - x*q^" + std::to_string(n - 1) + ")", pt.str());
        }
        for (std::size_t j = 0; j < extra_den.size(); ++j) {
            const Rational factor = Rational(1) - extra_den[j] * qp;
            if (factor.is_zero()) {
                throw InadmissibleError("(1 - v" + std::to_string(j + 1) + "*q^" +
                                            std::to_string(n - 1) + ")",
                                        pt.str());
            }
            den *= factor;
        }
        c[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n - 1)] * num / den;
        qp *= pt.q;
    }
    return Series(std::move(c));
}

Series build(const SeriesSpec& spec) {
    switch (spec.kind) {
        case SeriesSpec::Kind::g: return build_g(spec.point, spec.order);
        case SeriesSpec::Kind::s_even: return build_s_even(spec.k, spec.point, spec.order);
        case SeriesSpec::Kind::s_odd: return build_s_odd(spec.k, spec.point, spec.order);
    }
    throw DomainError("unknown series kind");
}

} // namespace qfrac

// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#include "qfrac/cfrac.hpp"

#include <string>
#include <utility>

#include "qfrac/errors.hpp"
#include "qfrac/qpoch.hpp"

namespace qfrac {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::extracted: return "extracted";
        case Provenance::closed_general: return "closed_general";
        case Provenance::closed_y0_special: return "closed_y0_special";
        case Provenance::closed_x0_special: return "closed_x0_special";
    }
    return "unknown";
}

const Rational& CfCoeffs::a(int i) const {
    if (i < 1 || i > size()) {
        throw DomainError("coefficient index " + std::to_string(i) + " outside a_1..a_" +
                          std::to_string(size()));
    }
    return values[static_cast<std::size_t>(i - 1)];
}

Extractor::Extractor(Series s0, Series s1)
    : s_prev_(std::move(s0)), s_curr_(std::move(s1)) {}

Rational Extractor::step() {
    if (s_curr_.const_term().is_zero()) {
        throw BreakdownError(index_ + 1, "ct(s_" + std::to_string(index_) + ") = 0");
    }
    const Rational a = s_prev_.const_term() / s_curr_.const_term();
    if (a.is_zero()) {
        throw BreakdownError(index_ + 1, "zero partial denominator (ct(s_" +
                                             std::to_string(index_ - 1) + ") = 0)");
    }
    if (s_curr_.valid_order() < 1) {
        throw OrderError("extraction state at s_" + std::to_string(index_) +
                         " has no order left to shift into");
    }
    Series next = shift_down(s_prev_ - a * s_curr_);
    s_prev_ = std::move(s_curr_);
    s_curr_ = std::move(next);
    ++index_;
    return a;
}

CfCoeffs extract_coeffs(const Series& s0, const Series& s1, int count, const ParamPoint& point) {
    if (count < 1) throw DomainError("need count >= 1 coefficients");
    const int order = std::min(s0.valid_order(), s1.valid_order());
    if (order < count) {
        throw OrderError("insufficient order: extracting a_1..a_" + std::to_string(count) +
                         " needs input valid order >= " + std::to_string(count) + ", got " +
                         std::to_string(order));
    }
    CfCoeffs cf;
    cf.provenance = Provenance::extracted;
    cf.point = point;
    cf.values.reserve(static_cast<std::size_t>(count));
    cf.values.emplace_back(1);
    Extractor ex(s0, s1);
    for (int i = 2; i <= count; ++i) {
        cf.values.push_back(ex.step());
    }
    return cf;
}

PartialExtraction extract_coeffs_partial(const Series& s0, const Series& s1, int count) {
    if (count < 1) throw DomainError("need count >= 1 coefficients");
    const int order = std::min(s0.valid_order(), s1.valid_order());
    if (order < count) {
        throw OrderError("insufficient order: extracting a_1..a_" + std::to_string(count) +
                         " needs input valid order >= " + std::to_string(count) + ", got " +
                         std::to_string(order));
    }
    PartialExtraction out;
    out.values.emplace_back(1);
    Extractor ex(s0, s1);
    for (int i = 2; i <= count; ++i) {
        try {
            out.values.push_back(ex.step());
        } catch (const BreakdownError& e) {
            out.breakdown_index = e.index();
            break;
        }
    }
    return out;
}

namespace {

// Multiplies the factors (1 - sym*q^(off+j)), j = 0..n-1, throwing the
// naming InadmissibleError at the first zero. sym = "" denotes the
// (q;q)-style family (1 - q^(off+j)).
Rational checked_poch(const Rational& a, int off, const std::string& sym, const ParamPoint& pt,
                      int n) {
    Rational acc(1);
    Rational qp = pow_int(pt.q, off);
    for (int j = 0; j < n; ++j) {
        const Rational factor = Rational(1) - a * qp;
        if (factor.is_zero()) {
            const std::string power = "q^" + std::to_string(off + j);
            throw InadmissibleError(sym.empty() ? "(1 - " + power + ")"
                                                : "(1 - " + sym + "*" + power + ")",
                                    pt.str());
        }
        acc *= factor;
        qp *= pt.q;
    }
    return acc;
}

// Q_k with every factor (y - x q^j) checked and named.
Rational checked_cross(const ParamPoint& pt, int k) {
    Rational acc(1);
    Rational qp(1);
    for (int j = 0; j <= k - 2; ++j) {
        const Rational factor = pt.y - pt.x * qp;
        if (factor.is_zero()) {
            throw InadmissibleError("(y - x*q^" + std::to_string(j) + ")", pt.str());
        }
        acc *= factor;
        qp *= pt.q;
    }
    return acc;
}

Rational checked_nonzero(Rational value, const std::string& name, const ParamPoint& pt) {
    if (value.is_zero()) throw InadmissibleError(name, pt.str());
    return value;
}

// q^e where a positive e must not hit q = 0 (the power sits in a
// denominator or multiplies one).
Rational checked_qpow(const ParamPoint& pt, long e) {
    if (e > 0 && pt.q.is_zero()) throw InadmissibleError("q", pt.str());
    return pow_int(pt.q, e);
}

} // namespace

Rational closed_a(int i, const ParamPoint& pt) {
    if (i < 1) throw DomainError("coefficient index must be >= 1, got " + std::to_string(i));
    if (i == 1) return Rational(1);
    const Rational one(1);
    if (i % 2 == 0) {
        const int k = i / 2;
        const Rational num = checked_poch(pt.x, 0, "x", pt, k - 1) *
                             checked_nonzero(one - pt.x * pow_int(pt.q, 2 * k - 2),
                                             "(1 - x*q^" + std::to_string(2 * k - 2) + ")", pt) *
                             checked_poch(pt.y, 1, "y", pt, k - 1);
        const Rational den = checked_nonzero(one - pt.y, "(1 - y)", pt) *
                             checked_qpow(pt, k - 1) * checked_cross(pt, k) *
                             checked_poch(one, 1, "", pt, k - 1);
        return num / den;
    }
    const int k = (i - 1) / 2;
    const Rational num = checked_nonzero(one - pt.y, "(1 - y)", pt) * checked_cross(pt, k) *
                         checked_nonzero(one - pt.x * pow_int(pt.q, 2 * k - 1),
                                         "(1 - x*q^" + std::to_string(2 * k - 1) + ")", pt) *
                         checked_poch(one, 1, "", pt, k - 1);
    const Rational den = checked_poch(pt.x, 0, "x", pt, k) * checked_poch(pt.y, 1, "y", pt, k);
    return -num / den;
}

Rational closed_a_y0(int i, const ParamPoint& pt) {
    if (!pt.y.is_zero()) {
        throw DomainError("y = 0 specialization evaluated at y = " + pt.y.str());
    }
    if (i < 1) throw DomainError("coefficient index must be >= 1, got " + std::to_string(i));
    if (i == 1) return Rational(1);
    const Rational one(1);
    if (i % 2 == 0) {
        const int k = i / 2;
        const Rational num = checked_poch(pt.x, 0, "x", pt, k - 1) *
                             checked_nonzero(one - pt.x * pow_int(pt.q, 2 * k - 2),
                                             "(1 - x*q^" + std::to_string(2 * k - 2) + ")", pt);
        Rational xpow(1);
        if (k >= 2) xpow = pow_int(checked_nonzero(pt.x, "x", pt), k - 1);
        const Rational den = xpow * checked_qpow(pt, binom2(k)) * checked_poch(one, 1, "", pt, k - 1);
        return num / den;
    }
    const int k = (i - 1) / 2;
    Rational xpow(1);
    if (k >= 2) xpow = pow_int(checked_nonzero(pt.x, "x", pt), k - 1);
    const Rational num = xpow * checked_qpow(pt, binom2(k - 1)) *
                         checked_nonzero(one - pt.x * pow_int(pt.q, 2 * k - 1),
                                         "(1 - x*q^" + std::to_string(2 * k - 1) + ")", pt) *
                         checked_poch(one, 1, "", pt, k - 1);
    const Rational den = checked_poch(pt.x, 0, "x", pt, k);
    return -num / den;
}

Rational closed_a_x0(int i, const ParamPoint& pt) {
    if (!pt.x.is_zero()) {
        throw DomainError("x = 0 specialization evaluated at x = " + pt.x.str());
    }
    if (i < 1) throw DomainError("coefficient index must be >= 1, got " + std::to_string(i));
    if (i == 1) return Rational(1);
    const Rational one(1);
    if (i % 2 == 0) {
        const int k = i / 2;
        const Rational num = checked_poch(pt.y, 1, "y", pt, k - 1);
        Rational ypow(1);
        if (k >= 2) {
            ypow = pow_int(checked_nonzero(pt.y, "y", pt) * checked_nonzero(pt.q, "q", pt), k - 1);
        }
        const Rational den =
            checked_nonzero(one - pt.y, "(1 - y)", pt) * ypow * checked_poch(one, 1, "", pt, k - 1);
        return num / den;
    }
    const int k = (i - 1) / 2;
    Rational ypow(1);
    if (k >= 2) ypow = pow_int(checked_nonzero(pt.y, "y", pt), k - 1);
    const Rational num =
        checked_nonzero(one - pt.y, "(1 - y)", pt) * ypow * checked_poch(one, 1, "", pt, k - 1);
    const Rational den = checked_poch(pt.y, 1, "y", pt, k);
    return -num / den;
}

namespace {

CfCoeffs closed_family(const ParamPoint& pt, int count, Provenance prov,
                       Rational (*one_coeff)(int, const ParamPoint&)) {
    if (count < 1) throw DomainError("need count >= 1 coefficients");
    CfCoeffs cf;
    cf.provenance = prov;
    cf.point = pt;
    cf.values.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) {
        Rational a = one_coeff(i, pt);
        if (a.is_zero()) {
            // cannot happen once every factor is checked; kept as a guard
            throw InadmissibleError("a_" + std::to_string(i), pt.str());
        }
        cf.values.push_back(std::move(a));
    }
    return cf;
}

} // namespace

CfCoeffs closed_coeffs(const ParamPoint& pt, int count) {
    return closed_family(pt, count, Provenance::closed_general, &closed_a);
}

CfCoeffs closed_coeffs_y0(const ParamPoint& pt, int count) {
    return closed_family(pt, count, Provenance::closed_y0_special, &closed_a_y0);
}

CfCoeffs closed_coeffs_x0(const ParamPoint& pt, int count) {
    return closed_family(pt, count, Provenance::closed_x0_special, &closed_a_x0);
}

Series convergent(const CfCoeffs& cf, int m, int order) {
    if (m < 1 || m > cf.size()) {
        throw DomainError("convergent index " + std::to_string(m) + " outside 1.." +
                          std::to_string(cf.size()));
    }
    Series h_pp = Series::unit(order); // h_{-1}
    Series h_p = Series::zero(order);  // h_0
    Series k_pp = Series::zero(order); // k_{-1}
    Series k_p = Series::unit(order);  // k_0
    for (int n = 1; n <= m; ++n) {
        const Rational& a = cf.a(n);
        Series h = a * h_p + shift_up(h_pp);
        Series k = a * k_p + shift_up(k_pp);
        h_pp = std::move(h_p);
        h_p = std::move(h);
        k_pp = std::move(k_p);
        k_p = std::move(k);
    }
    if (k_p.const_term().is_zero()) {
        throw DomainError("non-invertible convergent denominator: ct(k_" + std::to_string(m) +
                          ") = 0");
    }
    return h_p * recip(k_p);
}

Rational convergent_value(const CfCoeffs& cf, int m, const Rational& z) {
    if (m < 1 || m > cf.size()) {
        throw DomainError("convergent index " + std::to_string(m) + " outside 1.." +
                          std::to_string(cf.size()));
    }
    Rational h_pp(1), h_p(0), k_pp(0), k_p(1);
    for (int n = 1; n <= m; ++n) {
        const Rational& a = cf.a(n);
        Rational h = a * h_p + z * h_pp;
        Rational k = a * k_p + z * k_pp;
        h_pp = std::move(h_p);
        h_p = std::move(h);
        k_pp = std::move(k_p);
        k_p = std::move(k);
    }
    if (k_p.is_zero()) {
        throw DomainError("convergent denominator k_" + std::to_string(m) + " vanishes at z = " +
                          z.str());
    }
    return h_p / k_p;
}

} // namespace qfrac

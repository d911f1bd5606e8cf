// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#ifndef QFRAC_CFRAC_HPP
#define QFRAC_CFRAC_HPP

#include <optional>
#include <vector>

#include "qfrac/param_point.hpp"
#include "qfrac/series.hpp"

namespace qfrac {

/// How a coefficient sequence was obtained.
enum class Provenance {
    extracted,         ///< constant-term-annihilation recursion on series
    closed_general,    ///< product closed form in (q, x, y)
    closed_y0_special, ///< the separately stated y = 0 form
    closed_x0_special, ///< the separately stated x = 0 form
};

const char* provenance_name(Provenance p);

/// Partial denominators a_1..a_M of the C-fraction
/// z/(a_1 + z/(a_2 + z/(a_3 + ...))). A zero value is never stored;
/// extraction reports it as a breakdown and the closed forms reject the
/// point as inadmissible instead.
struct CfCoeffs {
    std::vector<Rational> values; ///< values[i-1] = a_i
    Provenance provenance = Provenance::extracted;
    ParamPoint point;

    int size() const { return static_cast<int>(values.size()); }
    const Rational& a(int i) const; ///< 1-based; throws DomainError out of range
};

/// The extraction recursion, one step at a time. Holds the running pair
/// (s_{i-1}, s_i); each step produces
///
///   a_{i+1} = ct(s_{i-1}) / ct(s_i),
///   s_{i+1} = (s_{i-1} - a_{i+1} s_i) / z,
///
/// the division by z being exact because a_{i+1} annihilates the
/// constant term. One valid order is consumed per step.
class Extractor {
public:
    /// Seeds the state at (s_0, s_1). The pair is the normalized split
    /// g = s_0 + z s_1 of a series g with g(0) = s_0(0) = 1, which pins
    /// the leading partial denominator a_1 = 1; step() then yields
    /// a_2, a_3, ...
    Extractor(Series s0, Series s1);

    /// Index i of the current s_i (starts at 1).
    int index() const { return index_; }

    const Series& prev() const { return s_prev_; }
    const Series& curr() const { return s_curr_; }

    /// Returns a_{i+1} and advances. Throws BreakdownError when
    /// ct(s_i) = 0 (or a zero a_{i+1} would result), OrderError when the
    /// state has no order left to shift into.
    Rational step();

private:
    Series s_prev_;
    Series s_curr_;
    int index_ = 1;
};

/// a_1..a_count from the recursion, starting at the normalized pair
/// (s0, s1); a_1 = 1 by the normalization (see Extractor). Requires both
/// input orders >= count: one order is consumed per step, checked up
/// front so a too-short input fails fast instead of truncating silently.
CfCoeffs extract_coeffs(const Series& s0, const Series& s1, int count,
                        const ParamPoint& point = {});

/// Extraction that stops at a breakdown instead of throwing: values
/// holds every coefficient produced, breakdown_index the 1-based index
/// that could not be, when any.
struct PartialExtraction {
    std::vector<Rational> values;
    std::optional<int> breakdown_index;
};
PartialExtraction extract_coeffs_partial(const Series& s0, const Series& s1, int count);

/// Closed form for a_i, written through Q_k = cross_poch so that y = 0
/// is an ordinary evaluation:
///
///   a_1      = 1,
///   a_{2k}   = (x;q)_{k-1} (1-xq^{2k-2}) (yq;q)_{k-1}
///              / [ (1-y) q^{k-1} Q_k (q;q)_{k-1} ],           k >= 1,
///   a_{2k+1} = - (1-y) Q_k (1-xq^{2k-1}) (q;q)_{k-1}
///              / [ (x;q)_k (yq;q)_k ],                        k >= 1.
///
/// Every listed factor (numerators included -- a zero value would mean
/// the C-fraction does not exist in this form) is checked and named in
/// the InadmissibleError on violation.
Rational closed_a(int i, const ParamPoint& pt);

/// The separately stated y = 0 form, verbatim including its sign:
///   a_{2k}   = (x;q)_{k-1} (1-xq^{2k-2}) / [ x^{k-1} q^C(k,2) (q;q)_{k-1} ],
///   a_{2k+1} = - x^{k-1} q^C(k-1,2) (1-xq^{2k-1}) (q;q)_{k-1} / (x;q)_k.
/// For k >= 2 this differs from closed_a at y = 0 by the factor
/// (-1)^{k-1}; the verify harness records that ratio rather than
/// reconciling it here. Requires pt.y == 0 exactly (DomainError).
Rational closed_a_y0(int i, const ParamPoint& pt);

/// The separately stated x = 0 form:
///   a_{2k}   = (yq;q)_{k-1} / [ (1-y) (yq)^{k-1} (q;q)_{k-1} ],
///   a_{2k+1} = - (1-y) y^{k-1} (q;q)_{k-1} / (yq;q)_k.
/// Agrees with closed_a at x = 0. Requires pt.x == 0 exactly.
Rational closed_a_x0(int i, const ParamPoint& pt);

CfCoeffs closed_coeffs(const ParamPoint& pt, int count);
CfCoeffs closed_coeffs_y0(const ParamPoint& pt, int count);
CfCoeffs closed_coeffs_x0(const ParamPoint& pt, int count);

/// m-th convergent as a series: h_m/k_m with
///   h_n = a_n h_{n-1} + z h_{n-2},  h_{-1} = 1, h_0 = 0,
///   k_n = a_n k_{n-1} + z k_{n-2},  k_{-1} = 0, k_0 = 1.
/// Throws DomainError when ct(k_m) = 0 (non-invertible denominator).
Series convergent(const CfCoeffs& cf, int m, int order);

/// m-th convergent evaluated exactly at a rational z, via the same
/// recurrences on scalars. Throws DomainError when k_m(z) = 0.
Rational convergent_value(const CfCoeffs& cf, int m, const Rational& z);

} // namespace qfrac

#endif // QFRAC_CFRAC_HPP

// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#ifndef QFRAC_VERIFY_HPP
#define QFRAC_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qfrac/cfrac.hpp"
#include "qfrac/param_point.hpp"
#include "qfrac/rational.hpp"

namespace qfrac {

/// One identity check at one index. lhs/rhs carry both sides' exact
/// values whenever the check fails (and for recorded-ratio checks, where
/// note holds the ratio).
struct CheckEntry {
    std::string check;
    int index = 0;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    std::string note;
};

/// All checks run at one parameter point. seed is the sampler seed that
/// produced the point (0 for explicit points).
struct VerifyReport {
    ParamPoint point;
    std::uint64_t seed = 0;
    int depth_m = 0;
    int order_n = 0;
    std::vector<CheckEntry> checks;

    int failure_count() const;
    bool all_pass() const { return failure_count() == 0; }
};

/// Coefficient agreement and convergent agreement at one point:
///   - "extract_vs_closed", i = 1..m_count: recursion-extracted a_i
///     equals the closed form, exactly;
///   - "convergent_agreement", m = 1..m_count: the m-th convergent of
///     the closed-form coefficients matches z * (1/g) through z^m;
///   - "convergent_next_differs", m = 1..m_count: the z^{m+1}
///     coefficients differ (truncation is sharp at this point).
/// Needs order >= m_count. Closed forms are evaluated before any series
/// work so an unusable point surfaces as InadmissibleError (named
/// factor) rather than a mid-extraction breakdown.
VerifyReport check_theorem(const ParamPoint& pt, int m_count, int order);

/// The two induction identities on the explicit denominator family,
/// checked coefficient-exactly through z^order:
///   even steps, k = 0..k_max: z s_{2k+2} = s_{2k} - a_{2k+2} s_{2k+1}
///     (k = 0 is the base step from s_0 = 1, s_1);
///   odd steps, k = 1..k_max:  z s_{2k+1} = s_{2k-1} - a_{2k+1} s_{2k}.
/// Entries are named "recursion_even"/"recursion_odd" and indexed by the
/// produced coefficient index i = 2k+2 / 2k+1. The point must admit the
/// builders involved (depth about 2(k_max+1) + order + 2).
VerifyReport check_recursion(const ParamPoint& pt, int k_max, int order);

/// Specialization sweep at sampled points with y = 0 and with x = 0
/// (points_per_case of each). Per y = 0 point:
///   - "y0_extract_vs_closed", i = 1..m_count: extraction equals the
///     general closed form (Q_k form), exactly;
///   - "y0_special_ratio", i = 2..m_count: ratio of the separately
///     stated y = 0 form to the extracted value equals (-1)^{k-1} for
///     i in {2k, 2k+1}; the exact ratio is recorded in note, and entries
///     with ratio != 1 are flagged as deviating from the general form.
/// Per x = 0 point:
///   - "x0_extract_vs_closed", i = 1..m_count;
///   - "x0_special_vs_closed", i = 1..m_count: the stated x = 0 form
///     equals the general closed form, exactly.
/// Reports come back ordered: all y = 0 points, then all x = 0 points.
std::vector<VerifyReport> check_specializations(int m_count, int order,
                                                std::uint64_t base_seed, int points_per_case);

/// g with extra Pochhammer factors to feed the extraction off the base
/// family.
struct GeneralizedSpec {
    std::vector<Rational> extra_num; ///< u_j: extra (u_j;q)_n numerator factors
    std::vector<Rational> extra_den; ///< v_j: extra (v_j;q)_n denominator factors
    ParamPoint point;
};

/// One extracted coefficient of the generalized series; value is empty
/// at the index where extraction broke down (legitimate off the base
/// family, so it is reported, not thrown).
struct ExploreRow {
    int index = 0;
    std::optional<Rational> value;
};

/// Extracted a_1..a_m_count of the generalized g, verbatim, for
/// inspection; no identity is asserted.
std::vector<ExploreRow> explore_generalized(const GeneralizedSpec& spec, int m_count);

/// One row of the numeric convergence table at a concrete z:
/// the m-th convergent's exact value, |C_m - S| and |T_m - S| where S is
/// the degree-(sum_order+1) partial sum of z/g and T_m its degree-m
/// partial sum. Raw data; nothing is asserted about monotonicity.
struct StudyRow {
    int m = 0;
    Rational convergent_at_z;
    Rational cf_error;
    Rational taylor_error;
};

/// Exact-rational convergence study at a point with |q| < 1 and a
/// concrete z. Throws DomainError when |q| >= 1 or a convergent
/// denominator vanishes at z.
std::vector<StudyRow> numeric_convergence_study(const ParamPoint& pt, const Rational& z,
                                                int m_max, int sum_order);

/// Runs fn(0..count-1) on up to jobs threads, returning results in index
/// order regardless of scheduling; the first exception (by index) is
/// rethrown. jobs < 1 means one thread.
std::vector<VerifyReport> run_point_checks(int count, int jobs,
                                           const std::function<VerifyReport(int)>& fn);

} // namespace qfrac

#endif // QFRAC_VERIFY_HPP

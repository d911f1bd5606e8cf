// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#include "qfrac/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <utility>

#include "qfrac/builders.hpp"
#include "qfrac/errors.hpp"
#include "qfrac/sampling.hpp"
#include "qfrac/series.hpp"

namespace qfrac {

int VerifyReport::failure_count() const {
    int n = 0;
    for (const auto& c : checks) {
        if (!c.pass) ++n;
    }
    return n;
}

namespace {

void add_value_check(VerifyReport& rep, const std::string& check, int index, const Rational& lhs,
                     const Rational& rhs) {
    CheckEntry e;
    e.check = check;
    e.index = index;
    e.pass = (lhs == rhs);
    if (!e.pass) {
        e.lhs = lhs.str();
        e.rhs = rhs.str();
    }
    rep.checks.push_back(std::move(e));
}

void add_series_check(VerifyReport& rep, const std::string& check, int index, const Series& lhs,
                      const Series& rhs, int through_order, bool expect_equal) {
    CheckEntry e;
    e.check = check;
    e.index = index;
    const bool equal = eq_to_order(lhs, rhs, through_order);
    e.pass = (equal == expect_equal);
    if (!e.pass) {
        e.lhs = truncate(lhs, through_order).str();
        e.rhs = truncate(rhs, through_order).str();
    }
    rep.checks.push_back(std::move(e));
}

} // namespace

VerifyReport check_theorem(const ParamPoint& pt, int m_count, int order) {
    if (m_count < 1) throw DomainError("need m_count >= 1");
    if (order < m_count) {
        throw OrderError("check_theorem needs order >= m_count (got order " +
                         std::to_string(order) + ", m_count " + std::to_string(m_count) + ")");
    }
    VerifyReport rep;
    rep.point = pt;
    rep.depth_m = m_count;
    rep.order_n = order;

    // Closed forms first: an unusable point is reported with its named
    // factor before extraction could turn it into a breakdown.
    const CfCoeffs closed = closed_coeffs(pt, m_count);

    const auto [s0, s1] = build_s0_s1(pt, order);
    const CfCoeffs ext = extract_coeffs(s0, s1, m_count, pt);
    for (int i = 1; i <= m_count; ++i) {
        add_value_check(rep, "extract_vs_closed", i, ext.a(i), closed.a(i));
    }

    const Series g = build_g(pt, order);
    const Series z_over_g = shift_up(recip(g)); // valid to order+1
    for (int m = 1; m <= m_count; ++m) {
        const Series cm = convergent(closed, m, m + 1);
        add_series_check(rep, "convergent_agreement", m, cm, z_over_g, m, true);

        // Truncation is sharp exactly when the fraction continues: with
        // a_{m+1} in existence the z^{m+1} coefficients must differ; at a
        // point where a_{m+1} does not exist the fraction terminates and
        // convergent m must reproduce z/g on the nose.
        bool next_exists = true;
        try {
            (void)closed_a(m + 1, pt);
        } catch (const InadmissibleError&) {
            next_exists = false;
        }
        CheckEntry sharp;
        sharp.check = "convergent_next_differs";
        sharp.index = m;
        const bool differs = cm.coeff(m + 1) != z_over_g.coeff(m + 1);
        sharp.pass = next_exists ? differs : !differs;
        if (!next_exists) {
            sharp.note = "a_" + std::to_string(m + 1) +
                         " does not exist here; convergent " + std::to_string(m) + " is exact";
        }
        if (!sharp.pass) {
            sharp.lhs = cm.coeff(m + 1).str();
            sharp.rhs = z_over_g.coeff(m + 1).str();
        }
        rep.checks.push_back(std::move(sharp));
    }
    return rep;
}

VerifyReport check_recursion(const ParamPoint& pt, int k_max, int order) {
    if (k_max < 1) throw DomainError("need k_max >= 1");
    VerifyReport rep;
    rep.point = pt;
    rep.depth_m = k_max;
    rep.order_n = order;

    const auto [s0, s1] = build_s0_s1(pt, order);
    std::vector<Series> even; // even[k] = s_{2k}, k >= 1
    std::vector<Series> odd;  // odd[k]  = s_{2k+1}, k >= 0
    even.push_back(s0);       // slot 0 is the initial value s_0 = 1
    for (int k = 1; k <= k_max + 1; ++k) even.push_back(build_s_even(k, pt, order));
    odd.push_back(s1);
    for (int k = 1; k <= k_max; ++k) odd.push_back(build_s_odd(k, pt, order));

    // In increasing produced-coefficient order: i = 2 is the base step.
    for (int i = 2; i <= 2 * k_max + 2; ++i) {
        const Rational a = closed_a(i, pt);
        if (i % 2 == 0) {
            const int k = (i - 2) / 2; // z s_{2k+2} = s_{2k} - a_{2k+2} s_{2k+1}
            const Series lhs = shift_up(even[static_cast<std::size_t>(k + 1)]);
            const Series rhs =
                even[static_cast<std::size_t>(k)] - a * odd[static_cast<std::size_t>(k)];
            add_series_check(rep, "recursion_even", i, lhs, rhs, order, true);
        } else {
            const int k = (i - 1) / 2; // z s_{2k+1} = s_{2k-1} - a_{2k+1} s_{2k}
            const Series lhs = shift_up(odd[static_cast<std::size_t>(k)]);
            const Series rhs =
                odd[static_cast<std::size_t>(k - 1)] - a * even[static_cast<std::size_t>(k)];
            add_series_check(rep, "recursion_odd", i, lhs, rhs, order, true);
        }
    }
    return rep;
}

std::vector<VerifyReport> check_specializations(int m_count, int order, std::uint64_t base_seed,
                                                int points_per_case) {
    if (m_count < 1) throw DomainError("need m_count >= 1");
    if (order < m_count) throw OrderError("check_specializations needs order >= m_count");
    if (points_per_case < 1) throw DomainError("need points_per_case >= 1");

    const int depth = std::max(m_count, order + 1);
    std::vector<VerifyReport> out;
    out.reserve(static_cast<std::size_t>(points_per_case) * 2);

    for (int t = 0; t < points_per_case; ++t) {
        const std::uint64_t seed = per_point_seed(base_seed, static_cast<std::uint64_t>(2 * t));
        const ParamPoint pt = sample_point_y0(seed, depth);
        VerifyReport rep;
        rep.point = pt;
        rep.seed = seed;
        rep.depth_m = m_count;
        rep.order_n = order;

        const CfCoeffs closed = closed_coeffs(pt, m_count);
        const auto [s0, s1] = build_s0_s1(pt, order);
        const CfCoeffs ext = extract_coeffs(s0, s1, m_count, pt);
        const CfCoeffs special = closed_coeffs_y0(pt, m_count);

        for (int i = 1; i <= m_count; ++i) {
            add_value_check(rep, "y0_extract_vs_closed", i, ext.a(i), closed.a(i));
        }
        for (int i = 2; i <= m_count; ++i) {
            const int k = (i % 2 == 0) ? i / 2 : (i - 1) / 2;
            const Rational expected = (k % 2 == 1) ? Rational(1) : Rational(-1); // (-1)^{k-1}
            const Rational ratio = special.a(i) / ext.a(i);
            CheckEntry e;
            e.check = "y0_special_ratio";
            e.index = i;
            e.pass = (ratio == expected);
            e.lhs = special.a(i).str();
            e.rhs = ext.a(i).str();
            e.note = "ratio=" + ratio.str();
            if (ratio != Rational(1)) e.note += " (differs from general form)";
            rep.checks.push_back(std::move(e));
        }
        out.push_back(std::move(rep));
    }

    for (int t = 0; t < points_per_case; ++t) {
        const std::uint64_t seed = per_point_seed(base_seed, static_cast<std::uint64_t>(2 * t + 1));
        const ParamPoint pt = sample_point_x0(seed, depth);
        VerifyReport rep;
        rep.point = pt;
        rep.seed = seed;
        rep.depth_m = m_count;
        rep.order_n = order;

        const CfCoeffs closed = closed_coeffs(pt, m_count);
        const auto [s0, s1] = build_s0_s1(pt, order);
        const CfCoeffs ext = extract_coeffs(s0, s1, m_count, pt);
        const CfCoeffs special = closed_coeffs_x0(pt, m_count);

        for (int i = 1; i <= m_count; ++i) {
            add_value_check(rep, "x0_extract_vs_closed", i, ext.a(i), closed.a(i));
        }
        for (int i = 1; i <= m_count; ++i) {
            add_value_check(rep, "x0_special_vs_closed", i, special.a(i), closed.a(i));
        }
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<ExploreRow> explore_generalized(const GeneralizedSpec& spec, int m_count) {
    if (m_count < 1) throw DomainError("need m_count >= 1");
    const Series g =
        build_g_generalized(spec.extra_num, spec.extra_den, spec.point, m_count + 1);
    const Series s0 = Series::unit(m_count);
    const Series s1 = shift_down(g - Series::unit(m_count + 1));
    const PartialExtraction pe = extract_coeffs_partial(s0, s1, m_count);

    std::vector<ExploreRow> rows;
    rows.reserve(pe.values.size() + 1);
    for (std::size_t j = 0; j < pe.values.size(); ++j) {
        rows.push_back({static_cast<int>(j) + 1, pe.values[j]});
    }
    if (pe.breakdown_index) {
        rows.push_back({*pe.breakdown_index, std::nullopt});
    }
    return rows;
}

std::vector<StudyRow> numeric_convergence_study(const ParamPoint& pt, const Rational& z,
                                                int m_max, int sum_order) {
    if (m_max < 1) throw DomainError("need m_max >= 1");
    if (!(abs(pt.q) < Rational(1))) {
        throw DomainError("convergence study needs |q| < 1, got q = " + pt.q.str());
    }
    if (sum_order < m_max) {
        throw OrderError("reference partial sum order " + std::to_string(sum_order) +
                         " is below m_max " + std::to_string(m_max));
    }

    const CfCoeffs closed = closed_coeffs(pt, m_max);
    const Series g = build_g(pt, sum_order);
    const Series z_over_g = shift_up(recip(g)); // coefficients through z^{sum_order+1}

    // Partial sums T_m of z/g at z, and the full reference S.
    std::vector<Rational> partial(static_cast<std::size_t>(sum_order) + 2);
    Rational zpow(1);
    Rational acc(0);
    for (int n = 0; n <= sum_order + 1; ++n) {
        acc += z_over_g.coeff(n) * zpow;
        partial[static_cast<std::size_t>(n)] = acc;
        zpow *= z;
    }
    const Rational reference = partial.back();

    std::vector<StudyRow> rows;
    rows.reserve(static_cast<std::size_t>(m_max));
    Rational h_pp(1), h_p(0), k_pp(0), k_p(1);
    for (int m = 1; m <= m_max; ++m) {
        const Rational& a = closed.a(m);
        Rational h = a * h_p + z * h_pp;
        Rational k = a * k_p + z * k_pp;
        h_pp = std::move(h_p);
        h_p = std::move(h);
        k_pp = std::move(k_p);
        k_p = std::move(k);
        if (k_p.is_zero()) {
            throw DomainError("convergent denominator k_" + std::to_string(m) +
                              " vanishes at z = " + z.str());
        }
        StudyRow row;
        row.m = m;
        row.convergent_at_z = h_p / k_p;
        row.cf_error = abs(row.convergent_at_z - reference);
        row.taylor_error = abs(partial[static_cast<std::size_t>(m)] - reference);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<VerifyReport> run_point_checks(int count, int jobs,
                                           const std::function<VerifyReport(int)>& fn) {
    if (count < 0) throw DomainError("negative point count");
    std::vector<VerifyReport> results(static_cast<std::size_t>(count));
    if (count == 0) return results;

    const int workers = std::max(1, std::min(jobs, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = fn(i);
        return results;
    }

    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                results[static_cast<std::size_t>(i)] = fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

} // namespace qfrac

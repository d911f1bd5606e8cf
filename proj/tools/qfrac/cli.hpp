// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#ifndef QFRAC_TOOLS_CLI_HPP
#define QFRAC_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qfrac/rational.hpp"

namespace qfrac::cli {

enum class Format { json, csv, text };

/// Everything a subcommand needs, after flag parsing and exact-rational
/// validation. Rationals cross the command line as "p/q" strings only;
/// decimals are rejected outright.
struct CliConfig {
    std::string command;

    Rational q, x, y, z;

    int depth_m = -1;     ///< -M / --depth (per-command default when < 0)
    int order_n = -1;     ///< -N / --order (per-command default when < 0)
    int points = -1;      ///< sampled points (per case, for `special`)
    int jobs = 0;         ///< worker threads; 0 = hardware concurrency
    int recursion_k = 0;  ///< verify: also run the recursion checks to this k
    int m_max = -1;       ///< study: convergents to evaluate (default 20)
    int sum_order = -1;   ///< study: reference partial-sum order (default 2*m_max+10)
    std::uint64_t seed = 0;

    std::vector<Rational> extra_num; ///< explore: u_j factors
    std::vector<Rational> extra_den; ///< explore: v_j factors

    std::string mode = "both"; ///< coeffs: both | closed | extracted

    Format format = Format::json;
    std::string out_path; ///< empty = standard output
};

/// Executes one parsed command, writing the report to `os`.
/// Returns the process exit code: 0 = all checks pass, 1 = at least one
/// identity mismatch, 2 = invalid or inadmissible input, 3 = extraction
/// breakdown.
int run(const CliConfig& cfg, std::ostream& os);

/// Full entry point: parse argv (including QFRAC_SEED fallback), route
/// output to --out or stdout, map every error to the exit-code contract.
int run_cli(int argc, const char* const* argv);

/// FNV-1a over the canonical report body; the text summary prints it so
/// identical verification runs are recognizable at a glance.
std::uint64_t fnv1a64(std::string_view bytes);

} // namespace qfrac::cli

#endif // QFRAC_TOOLS_CLI_HPP

// Copyright (c) 2026 qfrac contributors. Apache-2.0 license; see LICENSE.

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "qfrac/builders.hpp"
#include "qfrac/cfrac.hpp"
#include "qfrac/errors.hpp"
#include "qfrac/sampling.hpp"
#include "qfrac/series.hpp"
#include "qfrac/verify.hpp"

namespace qfrac::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Outcome {
    ordered_json params = ordered_json::object();
    ordered_json results = ordered_json::array();
    ordered_json failures = ordered_json::array();
    int exit_code = 0;
    std::string summary; ///< extra lines for the text renderer
};

int resolved(int value, int fallback) { return value < 0 ? fallback : value; }

void require_counts(int m, int n) {
    if (m < 1) throw DomainError("depth M must be >= 1, got " + std::to_string(m));
    if (n < m) {
        throw DomainError("order N must be >= depth M (got N = " + std::to_string(n) +
                          ", M = " + std::to_string(m) + ")");
    }
}

ParamPoint point_of(const CliConfig& cfg) { return ParamPoint{cfg.q, cfg.x, cfg.y, 0}; }

ordered_json coeff_strings(const Series& s) {
    ordered_json arr = ordered_json::array();
    for (const Rational& c : s.coeffs()) arr.push_back(c.str());
    return arr;
}

// --- subcommands -----------------------------------------------------------

Outcome cmd_coeffs(const CliConfig& cfg) {
    const int m = resolved(cfg.depth_m, 8);
    const int n = resolved(cfg.order_n, m);
    require_counts(m, n);

    Outcome o;
    o.params = {{"q", cfg.q.str()}, {"x", cfg.x.str()}, {"y", cfg.y.str()},
                {"m", m},           {"n", n},           {"mode", cfg.mode}};

    const ParamPoint pt = point_of(cfg);
    std::vector<Rational> closed, extracted;
    if (cfg.mode != "extracted") closed = closed_coeffs(pt, m).values;
    if (cfg.mode != "closed") {
        const auto [s0, s1] = build_s0_s1(pt, n);
        extracted = extract_coeffs(s0, s1, m, pt).values;
    }

    for (int i = 1; i <= m; ++i) {
        ordered_json row{{"i", i}};
        if (!closed.empty()) row["closed"] = closed[static_cast<std::size_t>(i - 1)].str();
        if (!extracted.empty()) row["extracted"] = extracted[static_cast<std::size_t>(i - 1)].str();
        o.results.push_back(row);
        if (!closed.empty() && !extracted.empty() &&
            closed[static_cast<std::size_t>(i - 1)] != extracted[static_cast<std::size_t>(i - 1)]) {
            o.failures.push_back(row);
        }
    }
    o.exit_code = o.failures.empty() ? 0 : 1;
    o.summary = o.failures.empty() ? "PASS" : "MISMATCH";
    return o;
}

Outcome cmd_expand(const CliConfig& cfg) {
    const int n = resolved(cfg.order_n, 16);
    if (n < 0) throw DomainError("order N must be >= 0");

    Outcome o;
    o.params = {{"q", cfg.q.str()}, {"x", cfg.x.str()}, {"y", cfg.y.str()}, {"n", n}};

    const Series g = build_g(point_of(cfg), n);
    const Series zg = shift_up(recip(g));
    for (int i = 0; i <= n; ++i) {
        o.results.push_back(ordered_json{
            {"n", i}, {"g", g.coeff(i).str()}, {"z_over_g", zg.coeff(i).str()}});
    }
    return o;
}

Outcome cmd_convergents(const CliConfig& cfg) {
    const int m = resolved(cfg.depth_m, 8);
    const int n = resolved(cfg.order_n, m + 1);
    if (m < 1) throw DomainError("depth M must be >= 1");
    if (n < 1) throw DomainError("order N must be >= 1");

    Outcome o;
    o.params = {{"q", cfg.q.str()}, {"x", cfg.x.str()}, {"y", cfg.y.str()}, {"m", m}, {"n", n}};

    const CfCoeffs closed = closed_coeffs(point_of(cfg), m);
    for (int j = 1; j <= m; ++j) {
        o.results.push_back(
            ordered_json{{"m", j}, {"coeffs", coeff_strings(convergent(closed, j, n))}});
    }
    return o;
}

void append_report_rows(Outcome& o, const VerifyReport& rep) {
    for (const CheckEntry& c : rep.checks) {
        ordered_json row{{"seed", rep.seed},
                         {"q", rep.point.q.str()},
                         {"x", rep.point.x.str()},
                         {"y", rep.point.y.str()},
                         {"check", c.check},
                         {"index", c.index},
                         {"pass", c.pass}};
        if (!c.lhs.empty()) row["lhs"] = c.lhs;
        if (!c.rhs.empty()) row["rhs"] = c.rhs;
        if (!c.note.empty()) row["note"] = c.note;
        o.results.push_back(row);
        if (!c.pass) o.failures.push_back(row);
    }
}

int default_jobs(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

Outcome cmd_verify(const CliConfig& cfg) {
    const int m = resolved(cfg.depth_m, 20);
    const int n = resolved(cfg.order_n, m + 4);
    const int points = resolved(cfg.points, 100);
    require_counts(m, n);
    if (points < 1) throw DomainError("need --points >= 1");
    const int k_rec = cfg.recursion_k;
    if (k_rec < 0) throw DomainError("--recursion-k must be >= 0");
    const int jobs = default_jobs(cfg.jobs);

    // one depth for the whole run: closed forms to m+1 (sharpness looks one
    // ahead), series to n, and the explicit builders when recursion is on
    int depth = std::max(m + 1, n + 1);
    if (k_rec > 0) depth = std::max(depth, 2 * (k_rec + 1) + n + 2);

    // jobs deliberately stays out of params: the report must not depend
    // on how many threads produced it
    Outcome o;
    o.params = {{"m", m}, {"n", n}, {"points", points}, {"recursion_k", k_rec}, {"depth", depth}};

    const auto fn = [&](int i) {
        const std::uint64_t point_seed =
            per_point_seed(cfg.seed, static_cast<std::uint64_t>(i));
        const ParamPoint pt = sample_point(point_seed, depth);
        VerifyReport rep = check_theorem(pt, m, n);
        rep.seed = point_seed;
        if (k_rec > 0) {
            VerifyReport rec = check_recursion(pt, k_rec, n);
            for (auto& entry : rec.checks) rep.checks.push_back(std::move(entry));
        }
        return rep;
    };
    const auto reports = run_point_checks(points, jobs, fn);
    for (const auto& rep : reports) append_report_rows(o, rep);

    o.exit_code = o.failures.empty() ? 0 : 1;
    return o;
}

Outcome cmd_special(const CliConfig& cfg) {
    const int m = resolved(cfg.depth_m, 21);
    const int n = resolved(cfg.order_n, m);
    const int points = resolved(cfg.points, 20);
    require_counts(m, n);
    if (points < 1) throw DomainError("need --points >= 1");

    Outcome o;
    o.params = {{"m", m}, {"n", n}, {"points_per_case", points}};

    const auto reports = check_specializations(m, n, cfg.seed, points);
    for (const auto& rep : reports) append_report_rows(o, rep);

    o.exit_code = o.failures.empty() ? 0 : 1;
    return o;
}

Outcome cmd_explore(const CliConfig& cfg) {
    const int m = resolved(cfg.depth_m, 8);
    if (m < 1) throw DomainError("depth M must be >= 1");

    Outcome o;
    ordered_json u = ordered_json::array(), v = ordered_json::array();
    for (const auto& r : cfg.extra_num) u.push_back(r.str());
    for (const auto& r : cfg.extra_den) v.push_back(r.str());
    o.params = {{"q", cfg.q.str()}, {"x", cfg.x.str()}, {"y", cfg.y.str()},
                {"m", m},           {"u", u},           {"v", v}};

    GeneralizedSpec spec;
    spec.extra_num = cfg.extra_num;
    spec.extra_den = cfg.extra_den;
    spec.point = point_of(cfg);
    for (const ExploreRow& row : explore_generalized(spec, m)) {
        o.results.push_back(ordered_json{{"i", row.index},
                                         {"a", row.value ? ordered_json(row.value->str())
                                                         : ordered_json(nullptr)},
                                         {"breakdown", !row.value.has_value()}});
    }
    return o;
}

Outcome cmd_study(const CliConfig& cfg) {
    const int m_max = resolved(cfg.m_max, 20);
    if (m_max < 1) throw DomainError("--m-max must be >= 1");
    const int sum_order = resolved(cfg.sum_order, 2 * m_max + 10);

    Outcome o;
    o.params = {{"q", cfg.q.str()}, {"x", cfg.x.str()},       {"y", cfg.y.str()},
                {"z", cfg.z.str()}, {"m_max", m_max},         {"sum_order", sum_order}};

    for (const StudyRow& row : numeric_convergence_study(point_of(cfg), cfg.z, m_max, sum_order)) {
        o.results.push_back(ordered_json{{"m", row.m},
                                         {"convergent", row.convergent_at_z.str()},
                                         {"cf_error", row.cf_error.str()},
                                         {"taylor_error", row.taylor_error.str()}});
    }
    return o;
}

Outcome dispatch(const CliConfig& cfg) {
    if (cfg.command == "coeffs") return cmd_coeffs(cfg);
    if (cfg.command == "expand") return cmd_expand(cfg);
    if (cfg.command == "convergents") return cmd_convergents(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "special") return cmd_special(cfg);
    if (cfg.command == "explore") return cmd_explore(cfg);
    if (cfg.command == "study") return cmd_study(cfg);
    throw DomainError("unknown command '" + cfg.command + "'");
}

// --- rendering --------------------------------------------------------------

std::string cell_text(const ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
        std::string joined;
        for (const auto& e : v) {
            if (!joined.empty()) joined += ' ';
            joined += cell_text(e);
        }
        return joined;
    }
    return v.dump();
}

std::vector<std::string> csv_columns(const std::string& command) {
    if (command == "coeffs") return {"i", "closed", "extracted"};
    if (command == "expand") return {"n", "g", "z_over_g"};
    if (command == "convergents") return {"m", "coeffs"};
    if (command == "explore") return {"i", "a", "breakdown"};
    if (command == "study") return {"m", "convergent", "cf_error", "taylor_error"};
    return {"seed", "q", "x", "y", "check", "index", "pass", "lhs", "rhs", "note"};
}

std::string render_csv(const std::string& command, const ordered_json& results) {
    const auto cols = csv_columns(command);
    std::string out;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (c) out += ',';
        out += cols[c];
    }
    out += '\n';
    for (const auto& row : results) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (c) out += ',';
            if (row.contains(cols[c])) out += cell_text(row.at(cols[c]));
        }
        out += '\n';
    }
    return out;
}

std::string render_table(const std::string& command, const ordered_json& results) {
    const auto cols = csv_columns(command);
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : results) {
        std::vector<std::string> line(cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (row.contains(cols[c])) line[c] = cell_text(row.at(cols[c]));
            width[c] = std::max(width[c], line[c].size());
        }
        cells.push_back(std::move(line));
    }
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            os << (c ? "  " : "");
            os << line[c] << std::string(width[c] - line[c].size(), ' ');
        }
        os << '\n';
    };
    std::vector<std::string> header(cols.begin(), cols.end());
    emit(header);
    for (const auto& line : cells) emit(line);
    return os.str();
}

std::string render_point_runs(const ordered_json& doc) {
    const auto& results = doc.at("results");
    const auto& failures = doc.at("failures");
    std::ostringstream os;
    os << "command: " << doc.at("command").get<std::string>() << '\n';
    os << "params:";
    for (const auto& [key, value] : doc.at("params").items()) {
        os << ' ' << key << '=' << cell_text(value);
    }
    os << " seed=" << cell_text(doc.at("seed")) << '\n';

    std::string current_key;
    int point_checks = 0, point_failures = 0;
    auto flush = [&]() {
        if (current_key.empty()) return;
        os << current_key << " checks=" << point_checks << " failures=" << point_failures << '\n';
    };
    for (const auto& row : results) {
        std::string key = "point seed=" + cell_text(row.at("seed")) +
                          " q=" + cell_text(row.at("q")) + " x=" + cell_text(row.at("x")) +
                          " y=" + cell_text(row.at("y"));
        if (key != current_key) {
            flush();
            current_key = std::move(key);
            point_checks = 0;
            point_failures = 0;
        }
        ++point_checks;
        if (!row.at("pass").get<bool>()) ++point_failures;
    }
    flush();

    for (const auto& row : failures) {
        os << "FAIL seed=" << cell_text(row.at("seed")) << " check=" << cell_text(row.at("check"))
           << " index=" << cell_text(row.at("index"));
        if (row.contains("lhs")) os << " lhs=" << cell_text(row.at("lhs"));
        if (row.contains("rhs")) os << " rhs=" << cell_text(row.at("rhs"));
        os << '\n';
    }

    const std::uint64_t hash = fnv1a64(results.dump() + failures.dump());
    os << "checks: " << results.size() << "  failures: " << failures.size() << '\n';
    std::ostringstream hs;
    hs << std::hex << std::setw(16) << std::setfill('0') << hash;
    os << "report-hash: 0x" << hs.str() << '\n';
    os << (failures.empty() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

std::string render(const CliConfig& cfg, const ordered_json& doc, const std::string& summary) {
    switch (cfg.format) {
        case Format::json:
            return doc.dump(2) + "\n";
        case Format::csv:
            return render_csv(cfg.command, doc.at("results"));
        case Format::text: {
            if (cfg.command == "verify" || cfg.command == "special") {
                return render_point_runs(doc);
            }
            std::string out = render_table(cfg.command, doc.at("results"));
            if (!summary.empty()) out += summary + "\n";
            return out;
        }
    }
    return {};
}

} // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (const char ch : bytes) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ULL;
    }
    return h;
}

int run(const CliConfig& cfg, std::ostream& os) {
    try {
        Outcome o = dispatch(cfg);
        ordered_json doc;
        doc["command"] = cfg.command;
        doc["params"] = std::move(o.params);
        doc["results"] = std::move(o.results);
        doc["failures"] = std::move(o.failures);
        doc["seed"] = cfg.seed;
        os << render(cfg, doc, o.summary);
        os.flush();
        return o.exit_code;
    } catch (const BreakdownError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const InadmissibleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{
        "qfrac: exact continued-fraction toolkit for the q-series\n"
        "g(z) = sum_n (y;q)_n z^n / (x;q)_n. Expands z/g(z) into the\n"
        "C-fraction z/(a_1 + z/(a_2 + ...)), evaluates the closed-form\n"
        "coefficients, and verifies their agreement at exact rational\n"
        "points.\n\n"
        "Rationals are written p or p/q (use --q=-1/2 for negatives);\n"
        "decimals are rejected. Exit codes: 0 all checks pass, 1 identity\n"
        "mismatch, 2 invalid or inadmissible input, 3 extraction breakdown."};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string q_str, x_str, y_str, z_str, format_str = "json";
    std::vector<std::string> u_strs, v_strs;

    const auto add_point = [&](CLI::App* cmd) {
        cmd->add_option("--q", q_str, "parameter q, exact rational (e.g. --q=1/2)")->required();
        cmd->add_option("--x", x_str, "parameter x, exact rational")->required();
        cmd->add_option("--y", y_str, "parameter y, exact rational")->required();
    };
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_str, "output format: json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
        cmd->add_option("--out", cfg.out_path, "write the report to this path");
    };
    const auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", cfg.seed, "base seed (QFRAC_SEED if unset)")
            ->envname("QFRAC_SEED");
    };

    CLI::App* coeffs = app.add_subcommand(
        "coeffs", "closed-form and extracted a_1..a_M side by side at a point");
    add_point(coeffs);
    coeffs->add_option("-M,--depth", cfg.depth_m, "number of coefficients (default 8)");
    coeffs->add_option("-N,--order", cfg.order_n, "series order for extraction (default M)");
    coeffs->add_option("--mode", cfg.mode, "both | closed | extracted")
        ->check(CLI::IsMember({"both", "closed", "extracted"}))
        ->capture_default_str();
    add_common(coeffs);
    add_seed(coeffs);

    CLI::App* expand = app.add_subcommand("expand", "coefficients of g and z/g at a point");
    add_point(expand);
    expand->add_option("-N,--order", cfg.order_n, "series order (default 16)");
    add_common(expand);
    add_seed(expand);

    CLI::App* conv =
        app.add_subcommand("convergents", "series of the convergents C_1..C_M at a point");
    add_point(conv);
    conv->add_option("-M,--depth", cfg.depth_m, "number of convergents (default 8)");
    conv->add_option("-N,--order", cfg.order_n, "series order (default M+1)");
    add_common(conv);
    add_seed(conv);

    CLI::App* verify = app.add_subcommand(
        "verify", "coefficient and convergent identities at sampled points");
    verify->add_option("-M,--depth", cfg.depth_m, "coefficients per point (default 20)");
    verify->add_option("-N,--order", cfg.order_n, "series order (default M+4)");
    verify->add_option("--points", cfg.points, "number of sampled points (default 100)");
    verify->add_option("--jobs", cfg.jobs, "worker threads (default: hardware concurrency)");
    verify->add_option("--recursion-k", cfg.recursion_k,
                       "also check the denominator recursion through this k (default off)");
    add_common(verify);
    add_seed(verify);

    CLI::App* special = app.add_subcommand(
        "special", "y=0 and x=0 specializations vs the general form at sampled points");
    special->add_option("-M,--depth", cfg.depth_m, "coefficients per point (default 21)");
    special->add_option("-N,--order", cfg.order_n, "series order (default M)");
    special->add_option("--points", cfg.points, "points per specialization case (default 20)");
    add_common(special);
    add_seed(special);

    CLI::App* explore = app.add_subcommand(
        "explore", "extracted coefficients of g with extra Pochhammer factors");
    add_point(explore);
    explore->add_option("-M,--depth", cfg.depth_m, "coefficients to extract (default 8)");
    explore->add_option("--u", u_strs, "extra numerator factor (u;q)_n, repeatable");
    explore->add_option("--v", v_strs, "extra denominator factor (v;q)_n, repeatable");
    add_common(explore);
    add_seed(explore);

    CLI::App* study = app.add_subcommand(
        "study", "exact convergence table of C_m(z) against a long partial sum of z/g");
    add_point(study);
    study->add_option("--z", z_str, "evaluation point z, exact rational")->required();
    study->add_option("--m-max", cfg.m_max, "convergents to evaluate (default 20)");
    study->add_option("--sum-order", cfg.sum_order,
                      "order of the reference partial sum (default 2*m_max+10)");
    add_common(study);
    add_seed(study);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        if (!q_str.empty()) cfg.q = Rational::parse_or_throw(q_str);
        if (!x_str.empty()) cfg.x = Rational::parse_or_throw(x_str);
        if (!y_str.empty()) cfg.y = Rational::parse_or_throw(y_str);
        if (!z_str.empty()) cfg.z = Rational::parse_or_throw(z_str);
        for (const auto& s : u_strs) cfg.extra_num.push_back(Rational::parse_or_throw(s));
        for (const auto& s : v_strs) cfg.extra_den.push_back(Rational::parse_or_throw(s));
        if (format_str == "csv") cfg.format = Format::csv;
        else if (format_str == "text") cfg.format = Format::text;
        else cfg.format = Format::json;

        if (cfg.out_path.empty()) {
            return run(cfg, std::cout);
        }
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open '" << cfg.out_path << "' for writing\n";
            return 2;
        }
        return run(cfg, file);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace qfrac::cli

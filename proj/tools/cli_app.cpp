#include "cli_app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "offsetwords/asymptotics.hpp"
#include "offsetwords/errors.hpp"
#include "offsetwords/exact_core.hpp"
#include "offsetwords/json_io.hpp"
#include "offsetwords/parseval.hpp"
#include "offsetwords/quadrature.hpp"
#include "offsetwords/series_engine.hpp"
#include "offsetwords/string_oracle.hpp"
#include "offsetwords/verification.hpp"

namespace offsetwords::cli {
namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Tunables shared by the subcommands. Layered as defaults, then the config
/// file, then OFFSETWORDS_<KEY> environment variables, then flags.
struct Settings {
    std::map<std::string, std::uint64_t> values{
        {"workers", Workers::hardware().count},
        {"oracle_cap", OracleBudget{}.max_strings},
        {"oracle_max_length", OracleBudget{}.max_total_length},
        {"table_cap", 0},
        {"parseval_cap", 0},
        {"probe_cap", default_probe_cap},
        {"list_limit", 1000},
        {"fourier_grid", 64},
        {"trunc", 10},
    };

    std::uint64_t get(const std::string& key) const { return values.at(key); }

    void set(const std::string& key, const std::string& text, const std::string& origin) {
        auto it = values.find(key);
        if (it == values.end()) throw UsageError(origin + ": unknown setting '" + key + "'");
        it->second = parse_unsigned(text, origin + ": " + key);
    }

    OracleBudget budget() const {
        OracleBudget b;
        b.max_strings = get("oracle_cap");
        b.max_total_length = static_cast<std::size_t>(get("oracle_max_length"));
        return b;
    }

    Workers workers() const { return Workers{static_cast<unsigned>(std::max<std::uint64_t>(1, get("workers")))}; }

    static std::uint64_t parse_unsigned(const std::string& text, const std::string& what) {
        std::size_t used = 0;
        std::uint64_t v = 0;
        try {
            if (text.empty() || text[0] == '-') throw std::invalid_argument(text);
            v = std::stoull(text, &used);
        } catch (const std::exception&) {
            throw UsageError(what + ": expected a nonnegative integer, got '" + text + "'");
        }
        if (used != text.size()) throw UsageError(what + ": expected a nonnegative integer, got '" + text + "'");
        return v;
    }
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

void load_config(Settings& settings, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        settings.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)), path + ":" + std::to_string(lineno));
    }
}

void load_environment(Settings& settings) {
    for (auto& [key, value] : settings.values) {
        std::string name = "OFFSETWORDS_" + key;
        for (auto& ch : name) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        if (const char* v = std::getenv(name.c_str())) settings.set(key, v, name);
    }
}

OffsetVector parse_xi(const std::string& text) {
    std::vector<OffsetVector::value_type> c;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        part = trim(part);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(part, &used);
        } catch (const std::exception&) {
            throw UsageError("--xi: cannot parse component '" + part + "'");
        }
        if (used != part.size()) throw UsageError("--xi: cannot parse component '" + part + "'");
        c.push_back(v);
    }
    if (!text.empty() && text.back() == ',') throw UsageError("--xi: trailing comma");
    if (c.empty()) throw UsageError("--xi: needs at least one component");
    return OffsetVector(std::move(c));
}

std::string fixed(double v, int digits = 15) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

int finish_suite(std::ostream& out, const std::vector<SuiteReport>& reports) {
    std::size_t total = 0, passed = 0;
    for (const auto& r : reports) {
        print_suite(out, r);
        for (const auto& c : r.checks) {
            ++total;
            passed += c.passed;
        }
    }
    out << passed << "/" << total << " checks passed\n";
    return passed == total ? ok : verification_failed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact enumeration and verification toolkit for offset words"};
    app.name("offsetwords");
    app.require_subcommand(1);

    std::string config_path;
    std::map<std::string, std::string> flag_settings;
    app.add_option("--config", config_path, "key=value settings file");
    auto setting_flag = [&](const std::string& flag, const std::string& key, const std::string& help) {
        app.add_option_function<std::string>(flag, [&flag_settings, key](const std::string& v) { flag_settings[key] = v; },
                                             help);
    };
    setting_flag("--workers", "workers", "worker threads (default: available cores)");
    setting_flag("--oracle-cap", "oracle_cap", "maximum strings the brute-force oracle may generate");
    setting_flag("--table-cap", "table_cap", "maximum truncation for full spectral tables");
    setting_flag("--parseval-cap", "parseval_cap", "maximum Parseval order K");
    setting_flag("--probe-cap", "probe_cap", "maximum compositions per asymptotic probe point");

    // count
    auto* count = app.add_subcommand("count", "exact w_(n, xi)");
    std::uint64_t n = 0;
    std::string xi_text;
    count->add_option("--n", n, "order")->required();
    count->add_option("--xi", xi_text, "offset, comma-separated")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force count by string enumeration");
    bool list = false;
    oracle->add_option("--n", n, "order")->required();
    oracle->add_option("--xi", xi_text, "offset, comma-separated")->required();
    oracle->add_flag("--list", list, "also print the strings (capped by list_limit)");

    // series
    auto* series = app.add_subcommand("series", "Fourier coefficient series as JSON");
    std::optional<std::size_t> d_opt;
    std::uint64_t r = 1;
    std::optional<std::size_t> trunc_opt;
    bool by_order = false, by_length = false;
    series->add_option("--xi", xi_text, "offset, comma-separated")->required();
    series->add_option("--d", d_opt, "dimension (must match --xi)");
    series->add_option("--r", r, "power r of the power sum")->check(CLI::PositiveNumber);
    series->add_option("--trunc", trunc_opt, "truncation order");
    auto* ogf_flag = series->add_flag("--ogf", by_order, "order-indexed W_xi(x)");
    series->add_flag("--by-length", by_length, "length-indexed series (default)")->excludes(ogf_flag);

    // spectral-table
    auto* table = app.add_subcommand("spectral-table", "truncated spectral density expansion as JSON");
    std::size_t d = 0;
    table->add_option("--d", d, "dimension")->required()->check(CLI::PositiveNumber);
    table->add_option("--r", r, "power r of the power sum")->check(CLI::PositiveNumber);
    table->add_option("--trunc", trunc_opt, "truncation order");

    // quad
    auto* quad = app.add_subcommand("quad", "grid quadrature of the integral representation");
    std::size_t grid = 0;
    quad->add_option("--n", n, "order")->required();
    quad->add_option("--xi", xi_text, "offset, comma-separated")->required();
    quad->add_option("--grid", grid, "points per axis (default: exactness threshold)");

    // asympt
    auto* asympt = app.add_subcommand("asympt", "asymptotic estimates against exact counts (CSV)");
    std::string regime_name;
    std::vector<std::uint64_t> sweep;
    std::int64_t m = 0;
    asympt->add_option("--regime", regime_name, "laplace | sphase | bigd")
        ->required()
        ->check(CLI::IsMember({"laplace", "sphase", "bigd"}));
    asympt->add_option("--xi", xi_text, "offset (laplace, sphase)");
    asympt->add_option("--n", n, "fixed order (sphase, bigd)");
    asympt->add_option("--m", m, "constant offset component (bigd)");
    asympt->add_option("--sweep", sweep, "sweep values: n, lambda or d")->delimiter(',');

    // parseval
    auto* parseval = app.add_subcommand("parseval", "Parseval identity coefficient table");
    std::size_t k_order = 0;
    std::optional<double> numeric_x;
    bool as_json = false;
    std::uint64_t roster = 4;
    parseval->add_option("--d", d, "dimension")->required()->check(CLI::PositiveNumber);
    parseval->add_option("--k", k_order, "largest x-power K")->required();
    parseval->add_option("--numeric", numeric_x, "also compare both sides numerically at x");
    parseval->add_option("--grid", grid, "points per axis for --numeric");
    parseval->add_option("--roster", roster, "list explicit pairs up to this total length");
    parseval->add_flag("--json", as_json, "JSON output");

    // verify
    auto* verify = app.add_subcommand("verify", "run invariant suites");
    std::string suite = "all";
    std::vector<std::string> suite_names = verification_suites();
    suite_names.push_back("all");
    verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_names));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        Settings settings;
        if (!config_path.empty()) load_config(settings, config_path);
        load_environment(settings);
        for (const auto& [key, v] : flag_settings) settings.set(key, v, "--" + key);
        const Workers workers = settings.workers();
        const OracleBudget budget = settings.budget();

        if (count->parsed()) {
            out << count_offset_words(n, parse_xi(xi_text), workers).str() << '\n';
            return ok;
        }
        if (oracle->parsed()) {
            const OffsetVector xi = parse_xi(xi_text);
            out << oracle_count(n, xi, budget).str() << '\n';
            if (list) {
                const auto limit = static_cast<std::size_t>(settings.get("list_limit"));
                for (const auto& w : list_offset_words(n, xi, budget, limit)) out << format_word(w) << '\n';
            }
            return ok;
        }
        if (series->parsed()) {
            const OffsetVector xi = parse_xi(xi_text);
            if (d_opt && *d_opt != xi.dim())
                throw UsageError("--d " + std::to_string(*d_opt) + " does not match --xi arity " +
                                 std::to_string(xi.dim()));
            const std::size_t N = trunc_opt ? *trunc_opt : static_cast<std::size_t>(settings.get("trunc"));
            if (by_order && r != 1) throw UsageError("--ogf is defined for r = 1 only");
            const XSeries s = by_order ? ogf_w(xi, N, workers) : fourier_coefficient_series(xi, xi.dim(), r, N);
            out << to_json(s).dump(2) << '\n';
            return ok;
        }
        if (table->parsed()) {
            const std::size_t N = trunc_opt ? *trunc_opt : static_cast<std::size_t>(settings.get("trunc"));
            const LaurentTable t = spectral_series(d, r, N, static_cast<std::size_t>(settings.get("table_cap")));
            out << to_json(t).dump(2) << '\n';
            return ok;
        }
        if (quad->parsed()) {
            const OffsetVector xi = parse_xi(xi_text);
            const std::size_t M = grid ? grid : integral_grid_threshold(n, xi);
            const Complex q = integral_count(n, xi, M, workers);
            const BigCount exact = count_offset_words(n, xi, workers);
            const double ex = exact.convert_to<double>();
            out << "exact: " << exact.str() << '\n'
                << "integral: " << fixed(q.real()) << '\n'
                << "imaginary: " << fixed(q.imag()) << '\n'
                << "relative_error: " << fixed(std::abs(q.real() - ex) / ex, 3) << '\n'
                << "grid: " << M << '\n';
            return ok;
        }
        if (asympt->parsed()) {
            ProbeParams p;
            Regime regime = Regime::laplace;
            if (regime_name == "laplace") {
                if (xi_text.empty()) throw UsageError("laplace needs --xi");
                p.xi = parse_xi(xi_text);
                if (sweep.empty()) sweep = {25, 50, 100, 200};
            } else if (regime_name == "sphase") {
                if (xi_text.empty()) throw UsageError("sphase needs --xi");
                regime = Regime::stationary_phase;
                p.xi = parse_xi(xi_text);
                p.n = n;
                if (sweep.empty()) sweep = {8, 16, 32, 64};
            } else {
                regime = Regime::large_d;
                p.n = n;
                p.m = m;
                if (sweep.empty()) sweep = {10, 100, 200};
            }
            const auto rows = ratio_probe(regime, p, sweep, settings.get("probe_cap"), workers);
            if (regime == Regime::stationary_phase) {
                out << "# stationary_phase: paper formula (see caveats)\n"
                    << "# caveat: the formula's growth in lambda does not match the exact counts;"
                       " ratios are reported, not asserted\n";
            }
            write_probe_csv(out, rows);
            return ok;
        }
        if (parseval->parsed()) {
            const auto cap = static_cast<std::size_t>(settings.get("parseval_cap"));
            const ParsevalReport rep = parseval_report(d, k_order, roster, budget, cap);
            std::optional<ParsevalNumeric> num;
            if (numeric_x)
                num = parseval_numeric_check(d, *numeric_x, grid ? grid : settings.get("fourier_grid"),
                                             cap ? std::min(cap, default_parseval_cap(d)) : 0, workers);
            if (as_json) {
                Json j = to_json(rep);
                if (num)
                    j["numeric"] = Json{{"x", *numeric_x},   {"lhs", num->lhs},       {"rhs", num->rhs},
                                        {"order", num->order}, {"tail_bound", num->tail_bound}, {"agrees", num->agrees}};
                out << j.dump(2) << '\n';
            } else {
                out << format_report(rep);
                if (num)
                    out << "numeric at x = " << fixed(*numeric_x) << ": lhs " << fixed(num->lhs) << ", rhs "
                        << fixed(num->rhs) << ", tail bound " << fixed(num->tail_bound, 3) << ", order "
                        << num->order << (num->agrees ? ", agree\n" : ", DISAGREE\n");
            }
            return rep.consistent() && (!num || num->agrees) ? ok : verification_failed;
        }
        if (verify->parsed()) {
            std::vector<SuiteReport> reports;
            if (suite == "all")
                for (const auto& s : verification_suites()) reports.push_back(run_verification_suite(s, budget));
            else
                reports.push_back(run_verification_suite(suite, budget));
            return finish_suite(out, reports);
        }
    } catch (const BudgetExceeded& e) {
        err << "budget refused: " << e.what() << '\n';
        return budget_refused;
    } catch (const InternalMismatch& e) {
        err << "internal mismatch: " << e.what() << '\n';
        return verification_failed;
    } catch (const std::invalid_argument& e) {
        err << "usage: " << e.what() << '\n';
        return usage_error;
    } catch (const std::domain_error& e) {
        err << "usage: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

} // namespace offsetwords::cli

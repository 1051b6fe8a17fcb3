#pragma once

// Invariant suites behind `offsetwords verify`. Each suite cross-checks one
// module against an independent route and reports one line per check.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "offsetwords/bessel_bell.hpp"
#include "offsetwords/exact_core.hpp"
#include "offsetwords/parseval.hpp"
#include "offsetwords/recurrence.hpp"
#include "offsetwords/string_oracle.hpp"

namespace offsetwords {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Fixed seed for every randomized check.
inline constexpr std::uint64_t verification_seed = 0x5eed'0f0f'2024ull;

namespace detail {

inline void all_offsets(std::size_t d, std::uint64_t max_norm, std::vector<OffsetVector>& out) {
    for_each_offset_within(d, max_norm, [&](const OffsetVector& xi) { out.push_back(xi); });
}

/// Uniform-ish integer in [lo, hi] straight from the engine, so sampled values
/// do not depend on the standard library's distribution implementation.
inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

} // namespace detail

/// Random nonzero offsets with 2 <= d <= max_d and |xi|_1 <= max_norm.
inline std::vector<OffsetVector> seeded_offsets(std::size_t count, std::size_t max_d, std::int64_t max_norm,
                                                std::uint64_t seed = verification_seed) {
    std::mt19937_64 rng(seed);
    std::vector<OffsetVector> out;
    while (out.size() < count) {
        const auto d = static_cast<std::size_t>(detail::draw(rng, 2, static_cast<std::int64_t>(max_d)));
        std::vector<std::int64_t> c(d);
        for (auto& v : c) v = detail::draw(rng, -max_norm / 2, max_norm / 2);
        std::int64_t norm = 0;
        for (auto v : c) norm += v < 0 ? -v : v;
        if (norm == 0 || norm > max_norm) continue;
        out.emplace_back(c);
    }
    return out;
}

inline SuiteReport verify_oracle(const OracleBudget& budget = {}) {
    SuiteReport rep{"oracle", {}};
    for (std::size_t d = 1; d <= 3; ++d) {
        std::vector<OffsetVector> offsets;
        detail::all_offsets(d, 3, offsets);
        std::size_t cases = 0, bad = 0;
        std::string first_bad;
        for (const auto& xi : offsets)
            for (std::uint64_t n = 0; n <= 4; ++n) {
                ++cases;
                if (oracle_count(n, xi, budget) != count_offset_words(n, xi)) {
                    if (!bad++) first_bad = "n=" + std::to_string(n) + " xi=" + xi.str();
                }
            }
        rep.checks.push_back({"oracle_count == count_offset_words, d=" + std::to_string(d), bad == 0,
                              std::to_string(cases) + " cases" + (bad ? ", first failure " + first_bad : "")});
    }
    // each string of length L carries exactly L+1 labels
    for (std::size_t d = 1; d <= 3; ++d)
        for (std::uint64_t L = 0; L <= 6; ++L) {
            std::vector<OffsetVector> offsets;
            detail::all_offsets(d, L, offsets);
            BigCount sum = 0;
            for (const auto& xi : offsets) {
                const auto norm = xi.one_norm();
                if ((L - norm) % 2) continue;
                sum += oracle_count((L - norm) / 2, xi, budget);
            }
            BigCount expect = BigCount(L + 1);
            for (std::uint64_t i = 0; i < L; ++i) expect *= BigCount(d);
            rep.checks.push_back({"label total (L+1) d^L, d=" + std::to_string(d) + " L=" + std::to_string(L),
                                  sum == expect, sum.str()});
        }
    return rep;
}

inline SuiteReport verify_recurrence() {
    SuiteReport rep{"recurrence", {}};
    for (std::size_t d = 2; d <= 4; ++d) {
        std::vector<OffsetVector> offsets;
        detail::all_offsets(d, 4, offsets);
        const auto splits = AlphabetSplit::all(d);
        std::size_t cases = 0, bad = 0;
        for (const auto& xi : offsets)
            for (std::uint64_t n = 0; n <= 6; ++n) {
                const BigCount w = count_offset_words(n, xi);
                for (const auto& s : splits) {
                    ++cases;
                    if (recurrence_count(n, xi, s) != w) ++bad;
                }
            }
        rep.checks.push_back({"recurrence == count, d=" + std::to_string(d), bad == 0,
                              std::to_string(cases) + " cases, " + std::to_string(bad) + " failures"});
    }
    return rep;
}

inline SuiteReport verify_divisibility() {
    SuiteReport rep{"divisibility", {}};
    for (std::size_t d = 1; d <= 6; ++d) {
        std::size_t cases = 0, bad = 0;
        for (std::int64_t m = -3; m <= 3; ++m)
            for (std::uint64_t n = 0; n <= 30; ++n) {
                if (n == 0 && m == 0) continue;
                const auto w = count_offset_words(n, OffsetVector::constant(d, m));
                ++cases;
                if (w % BigCount(d) != 0) ++bad;
            }
        rep.checks.push_back({"w(n, m 1_d) = 0 mod d, d=" + std::to_string(d), bad == 0,
                              std::to_string(cases) + " cases, " + std::to_string(bad) + " failures"});
    }
    std::size_t cases = 0, bad = 0;
    for (const auto& xi : seeded_offsets(200, 5, 6))
        for (std::uint64_t n = 0; n <= 10; ++n) {
            ++cases;
            if (count_offset_words(n, xi) % divisibility_modulus(xi) != 0) ++bad;
        }
    rep.checks.push_back({"lcm modulus on 200 seeded offsets", bad == 0,
                          std::to_string(cases) + " cases, " + std::to_string(bad) + " failures"});
    return rep;
}

inline SuiteReport verify_bessel() {
    SuiteReport rep{"bessel", {}};
    {
        std::size_t bad = 0;
        for (std::uint64_t nu = 0; nu <= 8; ++nu)
            if (bessel_zeta_even(nu, 1) != Rational(1, static_cast<long>(4 * (nu + 1)))) ++bad;
        rep.checks.push_back({"zeta_nu(2) = 1/(4(nu+1)), nu <= 8", bad == 0, std::to_string(bad) + " failures"});
    }
    {
        std::size_t cases = 0, bad = 0;
        for (std::size_t n = 0; n <= 8; ++n)
            for (std::uint64_t nu = 0; nu <= 4; ++nu)
                for (std::uint64_t d = 1; d <= 6; ++d) {
                    ++cases;
                    if (bell_B(n, nu, d) != bell_B_series(n, nu, d)) ++bad;
                }
        rep.checks.push_back({"Bell closed form == Bessel power coefficient", bad == 0,
                              std::to_string(cases) + " cases, " + std::to_string(bad) + " failures"});
    }
    {
        std::size_t cases = 0, bad = 0;
        for (std::uint64_t n = 0; n <= 6; ++n)
            for (std::int64_t m = -2; m <= 2; ++m)
                for (std::uint64_t d = 1; d <= 5; ++d) {
                    ++cases;
                    if (w_via_bessel(n, m, d) != count_offset_words(n, OffsetVector::constant(d, m))) ++bad;
                }
        rep.checks.push_back({"w_via_bessel == count_offset_words", bad == 0,
                              std::to_string(cases) + " cases, " + std::to_string(bad) + " failures"});
    }
    return rep;
}

inline SuiteReport verify_parseval(const OracleBudget& budget = {}) {
    SuiteReport rep{"parseval", {}};
    for (std::size_t d = 1; d <= 3; ++d) {
        const XSeries lhs = parseval_lhs(d, 6);
        const XSeries rhs = parseval_rhs_series(d, 6);
        rep.checks.push_back({"lhs == rhs through k=6, d=" + std::to_string(d), lhs == rhs, ""});
    }
    const XSeries lhs = parseval_lhs(2, 2);
    bool ok = true;
    std::string detail;
    for (std::size_t k = 0; k <= 2; ++k) {
        const BigCount pairs = enumerate_pairs_by_length(2, 2 * k, budget);
        detail += (k ? ", " : "") + pairs.str();
        if (Rational(pairs) != lhs[k]) ok = false;
    }
    rep.checks.push_back({"d=2 pair enumeration == series, lengths 0,2,4", ok, detail});
    return rep;
}

inline std::vector<std::string> verification_suites() {
    return {"oracle", "recurrence", "divisibility", "bessel", "parseval"};
}

inline SuiteReport run_verification_suite(const std::string& name, const OracleBudget& budget = {}) {
    if (name == "oracle") return verify_oracle(budget);
    if (name == "recurrence") return verify_recurrence();
    if (name == "divisibility") return verify_divisibility();
    if (name == "bessel") return verify_bessel();
    if (name == "parseval") return verify_parseval(budget);
    throw std::invalid_argument("unknown verification suite '" + name + "'");
}

inline void print_suite(std::ostream& os, const SuiteReport& rep) {
    for (const auto& c : rep.checks)
        os << (c.passed ? "PASS " : "FAIL ") << rep.suite << ": " << c.name
           << (c.detail.empty() ? "" : " [" + c.detail + "]") << '\n';
}

} // namespace offsetwords

#pragma once

// Combinatorial Parseval identity on T^d. Coefficient k of
//   sum_xi x^{|xi|_1} W_xi(x)^2
// counts pairs (u, v) in W_xi x W_xi, summed over xi, with |u| + |v| = 2k.
// Table rows are indexed by the total length 2k, never by fractional powers.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "offsetwords/errors.hpp"
#include "offsetwords/json_io.hpp"
#include "offsetwords/quadrature.hpp"
#include "offsetwords/series_engine.hpp"
#include "offsetwords/string_oracle.hpp"

namespace offsetwords {

/// Largest K for which the xi-sum is attempted by default.
inline std::size_t default_parseval_cap(std::size_t d) {
    switch (d) {
    case 1: return 200;
    case 2: return 40;
    case 3: return 12;
    default: return 6;
    }
}

/// Calls f(xi) for every xi in Z^d with |xi|_1 <= K.
template <class F>
void for_each_offset_within(std::size_t d, std::uint64_t K, F&& f) {
    std::vector<OffsetVector::value_type> xi(d, 0);
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t j, std::uint64_t left) {
        if (j == d) {
            f(OffsetVector(xi));
            return;
        }
        const auto L = static_cast<OffsetVector::value_type>(left);
        for (auto v = -L; v <= L; ++v) {
            xi[j] = v;
            rec(j + 1, left - static_cast<std::uint64_t>(v < 0 ? -v : v));
        }
        xi[j] = 0;
    };
    rec(0, K);
}

/// [x^k] sum_xi x^{|xi|_1} W_xi(x)^2 for k = 0..K, from exact offset-word counts.
inline XSeries parseval_lhs(std::size_t d, std::size_t K, std::size_t cap = 0) {
    if (d == 0) throw std::invalid_argument("parseval needs d >= 1");
    if (cap == 0) cap = default_parseval_cap(d);
    if (K > cap) throw BudgetExceeded("parseval order " + std::to_string(K) + " exceeds cap " + std::to_string(cap));
    std::vector<BigCount> acc(K + 1);
    for_each_offset_within(d, K, [&](const OffsetVector& xi) {
        const std::size_t norm = static_cast<std::size_t>(xi.one_norm());
        const std::size_t top = K - norm;
        std::vector<BigCount> w(top + 1);
        for (std::size_t n = 0; n <= top; ++n) w[n] = count_offset_words(n, xi);
        for (std::size_t a = 0; a <= top; ++a)
            for (std::size_t b = 0; a + b <= top; ++b) acc[a + b + norm] += w[a] * w[b];
    });
    return XSeries::from_counts(acc);
}

/// The same coefficients from the squared Fourier coefficients of the
/// spectral-density table through x^{2K}. Each squared entry has only even
/// powers; power 2k maps to coefficient k.
inline XSeries parseval_rhs_series(std::size_t d, std::size_t K, std::size_t table_cap = 0) {
    if (d == 0) throw std::invalid_argument("parseval needs d >= 1");
    if (table_cap == 0) table_cap = 2 * default_parseval_cap(d);
    const LaurentTable table = spectral_series(d, 1, 2 * K, table_cap);
    XSeries total(2 * K);
    for (const auto& [eta, s] : table.entries()) total += s * s;
    XSeries out(K);
    for (std::size_t k = 0; k <= 2 * K; ++k) {
        if (k % 2 == 1) {
            if (total[k] != 0) throw InternalMismatch("odd power survived in the squared table sum");
            continue;
        }
        out[k / 2] = total[k];
    }
    return out;
}

struct ParsevalNumeric {
    double lhs;        // truncated series at x
    double tail_bound; // bound on the omitted series tail
    double rhs;        // grid quadrature of |S|^2
    std::size_t order; // truncation K used for lhs
    bool agrees;       // |lhs - rhs| <= tail_bound + 1e-8
};

/// Bound on sum_{k > K} c_k x^k with c_k <= (2k+1)(k+1) d^{2k}: ordered string
/// pairs of total length 2k number (2k+1) d^{2k}, and each pair shares at most
/// k+1 offsets.
inline double parseval_tail_bound(std::size_t d, double x, std::size_t K) {
    const double q = static_cast<double>(d * d) * x;
    if (q >= 1.0) return INFINITY;
    auto term = [&](double k) { return (2 * k + 1) * (k + 1) * std::pow(q, k); };
    double sum = 0.0;
    double k = static_cast<double>(K) + 1;
    // sum explicitly until the term ratio is safely below 1, then close geometrically
    while (true) {
        const double ratio = q * (2 * k + 3) * (k + 2) / ((2 * k + 1) * (k + 1));
        if (ratio < 0.5 * (1 + q) && ratio < 1.0) return sum + term(k) / (1 - ratio);
        sum += term(k);
        k += 1;
    }
}

/// Evaluates both sides of the identity at a real x in [0, 1/d^2).
inline ParsevalNumeric parseval_numeric_check(std::size_t d, double x, std::size_t M = 64, std::size_t K = 0,
                                              Workers workers = Workers{}) {
    if (d == 0) throw std::invalid_argument("parseval needs d >= 1");
    const double limit = 1.0 / static_cast<double>(d * d);
    if (!(x >= 0.0 && x < limit))
        throw std::invalid_argument("parseval numeric check needs x in [0, 1/d^2)");
    if (K == 0) K = default_parseval_cap(d);
    const XSeries coeffs = parseval_lhs(d, K, K);
    const double lhs = coeffs.evaluate(x);
    const double tail = parseval_tail_bound(d, x, K);

    const double y = std::sqrt(x);
    const TorusGrid grid(d, M);
    std::vector<Complex> roots(M);
    for (std::size_t k = 0; k < M; ++k) roots[k] = std::polar(1.0, grid.angle(k));
    const Complex rhs = grid_average(
        grid,
        [&](std::span<const std::size_t> idx) {
            Complex p = 0.0;
            for (auto k : idx) p += roots[k];
            const double s = 1.0 / std::norm(1.0 - y * p);
            return Complex(s * s, 0.0);
        },
        workers);
    return ParsevalNumeric{lhs, tail, rhs.real(), K, std::abs(lhs - rhs.real()) <= tail + 1e-8};
}

// ---------------------------------------------------------------------------
// Table report

struct ParsevalRow {
    std::size_t total_length;  // 2k
    BigCount lhs;
    BigCount rhs;
    std::optional<BigCount> oracle;
    std::vector<OffsetPair> roster;
};

struct ParsevalReport {
    std::size_t d;
    std::vector<ParsevalRow> rows;

    bool consistent() const {
        for (const auto& r : rows)
            if (r.lhs != r.rhs || (r.oracle && *r.oracle != r.lhs)) return false;
        return true;
    }
};

/// Rows for k = 0..K with both series routes. The string oracle is added while within
/// budget, and the explicit pair roster for total lengths up to roster_max_length.
inline ParsevalReport parseval_report(std::size_t d, std::size_t K, std::uint64_t roster_max_length = 4,
                                      const OracleBudget& budget = {}, std::size_t cap = 0) {
    const XSeries lhs = parseval_lhs(d, K, cap);
    const XSeries rhs = parseval_rhs_series(d, K, 2 * (cap ? cap : default_parseval_cap(d)));
    ParsevalReport rep{d, {}};
    for (std::size_t k = 0; k <= K; ++k) {
        ParsevalRow row{2 * k, numerator_of(lhs[k]), numerator_of(rhs[k]), std::nullopt, {}};
        try {
            row.oracle = enumerate_pairs_by_length(d, 2 * k, budget);
            if (2 * k <= roster_max_length) row.roster = pair_roster(d, 2 * k, budget);
        } catch (const BudgetExceeded&) {
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

inline Json to_json(const ParsevalReport& rep) {
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
        Json row{{"length", r.total_length}, {"lhs", r.lhs.str()}, {"rhs", r.rhs.str()}};
        row["oracle"] = r.oracle ? Json(r.oracle->str()) : Json(nullptr);
        Json roster = Json::array();
        for (const auto& p : r.roster) {
            Json off = Json::array();
            for (auto v : p.offset.components()) off.push_back(v);
            roster.push_back(Json{{"u", format_word(p.first)}, {"v", format_word(p.second)}, {"offset", off}});
        }
        row["pairs"] = std::move(roster);
        rows.push_back(std::move(row));
    }
    return Json{{"d", rep.d}, {"consistent", rep.consistent()}, {"rows", std::move(rows)}};
}

inline std::string format_report(const ParsevalReport& rep) {
    std::string out = "d = " + std::to_string(rep.d) + "\n";
    out += "length | lhs | rhs | oracle\n";
    for (const auto& r : rep.rows) {
        out += std::to_string(r.total_length) + " | " + r.lhs.str() + " | " + r.rhs.str() + " | " +
               (r.oracle ? r.oracle->str() : std::string("-")) + "\n";
        for (const auto& p : r.roster)
            out += "    (" + format_word(p.first) + ", " + format_word(p.second) + ") in W" + p.offset.str() + "\n";
    }
    out += rep.consistent() ? "all routes agree\n" : "ROUTES DISAGREE\n";
    return out;
}

} // namespace offsetwords

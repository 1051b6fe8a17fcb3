#pragma once

// Leading-order estimates of w_{(n, xi)} in three regimes, evaluated in log
// space so that d^{2n + ...} never overflows, plus the convergence probe that
// pairs each estimate with the exact count.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "offsetwords/errors.hpp"
#include "offsetwords/exact_core.hpp"

namespace offsetwords {

enum class Regime { laplace, stationary_phase, large_d };

inline std::string to_string(Regime r) {
    switch (r) {
    case Regime::laplace: return "laplace";
    case Regime::stationary_phase: return "stationary_phase";
    case Regime::large_d: return "large_d";
    }
    return "unknown";
}

struct AsymptoticEstimate {
    double log_value;
    Regime regime;
    std::string inputs;

    double value() const { return std::exp(log_value); }
};

/// w_{(n, xi)} ~ d^{2n + d/2 + |xi|_1} (4 pi n)^{(1-d)/2} as n -> infinity.
inline AsymptoticEstimate laplace_estimate(std::uint64_t n, const OffsetVector& xi) {
    if (n == 0) throw std::invalid_argument("laplace estimate needs n >= 1");
    const double d = static_cast<double>(xi.dim());
    const double nn = static_cast<double>(n);
    const double lv = (2 * nn + d / 2 + static_cast<double>(xi.one_norm())) * std::log(d) +
                      (1 - d) / 2 * std::log(4 * std::numbers::pi * nn);
    return {lv, Regime::laplace, "n=" + std::to_string(n) + " xi=" + xi.str()};
}

/// The stationary-phase formula for w_{(n, lambda xi)} as lambda -> infinity,
///   (2 pi)^{1 - 3d/2} / sqrt(|xi|_1 (d+1)) * d^{lambda |xi|_1 + 2n + d/2 + 1} * lambda^{-d/2}.
/// Evaluated as printed. It does not track the exact counts (see ratio_probe).
inline AsymptoticEstimate stationary_phase_estimate(std::uint64_t n, const OffsetVector& xi, std::uint64_t lambda) {
    if (xi.is_zero()) throw std::invalid_argument("stationary phase estimate needs xi != 0");
    if (lambda == 0) throw std::invalid_argument("stationary phase estimate needs lambda >= 1");
    const double d = static_cast<double>(xi.dim());
    const double norm = static_cast<double>(xi.one_norm());
    const double l = static_cast<double>(lambda);
    const double lv = (1 - 1.5 * d) * std::log(2 * std::numbers::pi) - 0.5 * std::log(norm * (d + 1)) +
                      (l * norm + 2 * static_cast<double>(n) + d / 2 + 1) * std::log(d) - d / 2 * std::log(l);
    return {lv, Regime::stationary_phase,
            "n=" + std::to_string(n) + " xi=" + xi.str() + " lambda=" + std::to_string(lambda)};
}

/// Closed form (|xi|_1/d)^d (d+1) of the Hessian determinant of the phase at the origin.
inline double stationary_phase_hessian_det(const OffsetVector& xi, std::size_t d) {
    if (d < 2) throw std::invalid_argument("hessian determinant needs d >= 2");
    if (xi.dim() != d) throw std::invalid_argument("offset dimension does not match d");
    return std::pow(static_cast<double>(xi.one_norm()) / static_cast<double>(d), static_cast<double>(d)) *
           static_cast<double>(d + 1);
}

/// Determinant of the d x d symmetric tridiagonal Toeplitz Hessian with
/// diagonal 2|xi|_1/d and off-diagonal -|xi|_1/d, by the three-term recurrence.
inline double tridiagonal_hessian_det(const OffsetVector& xi, std::size_t d) {
    if (d < 2) throw std::invalid_argument("hessian determinant needs d >= 2");
    const double s = static_cast<double>(xi.one_norm()) / static_cast<double>(d);
    const double a = 2 * s, b = -s;
    double prev = 1.0, cur = a;
    for (std::size_t k = 2; k <= d; ++k) {
        const double next = a * cur - b * b * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Large-dimension estimate of w_{(n, m 1_d)}: for m != 0
///   sqrt(2 pi) (|m| d)^{|m| d + 1/2} / (|m|! e^{|m|})^d * (|m| d^2 / (|m|+1))^n,
/// and n! d^n for m = 0.
inline AsymptoticEstimate large_d_estimate(std::uint64_t n, std::int64_t m, std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("large-d estimate needs d >= 1");
    const double dd = static_cast<double>(d), nn = static_cast<double>(n);
    const std::string inputs = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " d=" + std::to_string(d);
    if (m == 0) return {std::lgamma(nn + 1) + nn * std::log(dd), Regime::large_d, inputs};
    const double am = static_cast<double>(m < 0 ? -m : m);
    const double lv = 0.5 * std::log(2 * std::numbers::pi) + (am * dd + 0.5) * std::log(am * dd) -
                      dd * (std::lgamma(am + 1) + am) + nn * std::log(am * dd * dd / (am + 1));
    return {lv, Regime::large_d, inputs};
}

// ---------------------------------------------------------------------------
// Convergence probe

struct ProbeRow {
    std::uint64_t sweep;
    BigCount exact;
    AsymptoticEstimate estimate;

    /// exact / estimate, via the log difference.
    double ratio() const { return std::exp(log_of(exact) - estimate.log_value); }
};

struct ProbeParams {
    std::uint64_t n = 0;                      // fixed order (stationary_phase, large_d)
    OffsetVector xi = OffsetVector::zero(1);  // fixed direction (laplace, stationary_phase)
    std::int64_t m = 0;                       // constant offset (large_d)
};

/// Largest number of weak compositions a single probe point may sum over.
inline constexpr std::uint64_t default_probe_cap = 20'000'000;

/// Pairs exact counts with the regime's estimate over a sweep:
///   laplace          sweep = n,      exact w_{(n, xi)}
///   stationary_phase sweep = lambda, exact w_{(n, lambda xi)}
///   large_d          sweep = d,      exact w_{(n, m 1_d)}
/// Makes no assertion; the caller judges convergence.
inline std::vector<ProbeRow> ratio_probe(Regime regime, const ProbeParams& p,
                                         const std::vector<std::uint64_t>& sweep,
                                         std::uint64_t cap = default_probe_cap, Workers workers = Workers{}) {
    std::vector<ProbeRow> rows;
    for (auto s : sweep) {
        std::uint64_t n = 0;
        OffsetVector xi = p.xi;
        switch (regime) {
        case Regime::laplace: n = s; break;
        case Regime::stationary_phase:
            n = p.n;
            xi = p.xi.scaled(static_cast<OffsetVector::value_type>(s));
            break;
        case Regime::large_d:
            n = p.n;
            xi = OffsetVector::constant(static_cast<std::size_t>(s), p.m);
            break;
        }
        if (composition_count(n, xi.dim()) > cap)
            throw BudgetExceeded("probe point " + std::to_string(s) + " needs more than " + std::to_string(cap) +
                                 " compositions");
        const BigCount exact = count_offset_words(n, xi, workers);
        AsymptoticEstimate est = regime == Regime::laplace            ? laplace_estimate(n, xi)
                                 : regime == Regime::stationary_phase ? stationary_phase_estimate(p.n, p.xi, s)
                                                                      : large_d_estimate(p.n, p.m, s);
        rows.push_back(ProbeRow{s, exact, std::move(est)});
    }
    return rows;
}

inline void write_probe_csv(std::ostream& os, const std::vector<ProbeRow>& rows) {
    os << "sweep_value,exact,estimate,ratio\n";
    for (const auto& r : rows) {
        char est[64], ratio[64];
        // value() overflows to inf beyond ~1e308; print mantissa/exponent from the log instead
        const double l10 = r.estimate.log_value / std::log(10.0);
        const double e10 = std::floor(l10);
        std::snprintf(est, sizeof est, "%.15fe%+03d", std::pow(10.0, l10 - e10), static_cast<int>(e10));
        std::snprintf(ratio, sizeof ratio, "%.15g", r.ratio());
        os << r.sweep << ',' << r.exact.str() << ',' << est << ',' << ratio << '\n';
    }
}

} // namespace offsetwords

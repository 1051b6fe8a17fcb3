#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "offsetwords/errors.hpp"
#include "offsetwords/exact_core.hpp"
#include "offsetwords/xseries.hpp"

namespace offsetwords {

/// Truncated z-expansion of a spectral density: exponent vector -> x-series.
/// Only exponents eta with |eta/r|_1 <= N are present.
class LaurentTable {
public:
    LaurentTable(std::size_t d, std::uint64_t r, std::size_t truncation)
        : d_(d), r_(r), n_(truncation) {}

    std::size_t dim() const noexcept { return d_; }
    std::uint64_t power() const noexcept { return r_; }
    std::size_t truncation() const noexcept { return n_; }
    const std::map<OffsetVector, XSeries>& entries() const noexcept { return entries_; }

    /// Entry at eta, or the zero series when eta is structurally absent.
    XSeries at(const OffsetVector& eta) const {
        if (eta.dim() != d_) throw std::invalid_argument("exponent dimension mismatch");
        auto it = entries_.find(eta);
        return it == entries_.end() ? XSeries(n_) : it->second;
    }

    void insert(OffsetVector eta, XSeries s) { entries_.insert_or_assign(std::move(eta), std::move(s)); }

private:
    std::size_t d_;
    std::uint64_t r_;
    std::size_t n_;
    std::map<OffsetVector, XSeries> entries_;
};

/// Default cap on the full-table truncation order.
inline std::size_t default_table_cap(std::size_t d) { return d <= 3 ? 40 : 16; }

/// Expansion of |1 - x (z_1^r + ... + z_d^r)|^{-2} through x^N:
///   [x^n] = sum_k (sum z_i^r)^k (sum conj(z_i)^r)^{n-k},
/// each factor expanded by the multinomial theorem and the products collected
/// by exponent vector r (kappa - kappa').
inline LaurentTable spectral_series(std::size_t d, std::uint64_t r, std::size_t N,
                                    std::size_t cap = 0) {
    if (d == 0) throw std::invalid_argument("spectral_series needs d >= 1");
    if (r == 0) throw std::invalid_argument("spectral_series needs r >= 1");
    if (cap == 0) cap = default_table_cap(d);
    if (N > cap)
        throw BudgetExceeded("spectral table truncation " + std::to_string(N) + " exceeds cap " +
                             std::to_string(cap));

    // multinomial expansions of (z_1 + ... + z_d)^s, s = 0..N
    struct Term {
        Counts kappa;
        BigCount coeff;
    };
    std::vector<std::vector<Term>> powers(N + 1);
    for (std::size_t s = 0; s <= N; ++s)
        for_each_composition(s, d, [&](std::span<const std::uint64_t> k) {
            powers[s].push_back(Term{Counts(k.begin(), k.end()), multinomial(k)});
        });

    const std::uint64_t base = 2 * N + 1;
    {
        long double span = 1;
        for (std::size_t j = 0; j < d; ++j) span *= static_cast<long double>(base);
        if (span > 1.8e19L) throw BudgetExceeded("spectral table exponent range too large");
    }
    auto key_of = [&](const Counts& a, const Counts& b) {
        std::uint64_t key = 0;
        for (std::size_t j = d; j-- > 0;) key = key * base + (a[j] + N - b[j]);
        return key;
    };

    std::unordered_map<std::uint64_t, std::vector<BigCount>> acc;
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            for (const auto& t1 : powers[k])
                for (const auto& t2 : powers[n - k]) {
                    auto& slot = acc[key_of(t1.kappa, t2.kappa)];
                    if (slot.empty()) slot.resize(N + 1);
                    slot[n] += t1.coeff * t2.coeff;
                }

    LaurentTable table(d, r, N);
    for (auto& [key, coeffs] : acc) {
        std::vector<std::int64_t> eta(d);
        std::uint64_t rest = key;
        for (std::size_t j = 0; j < d; ++j) {
            eta[j] = (static_cast<std::int64_t>(rest % base) - static_cast<std::int64_t>(N)) *
                     static_cast<std::int64_t>(r);
            rest /= base;
        }
        table.insert(OffsetVector(std::move(eta)), XSeries::from_counts(coeffs));
    }
    return table;
}

/// Fourier coefficient at xi of the spectral density of 1 - x p_{r,d}, as a
/// series in x counted by string length. Zero unless r divides xi; otherwise
/// [x^{2n + |xi/r|_1}] = w_{(n, xi/r)}.
inline XSeries fourier_coefficient_series(const OffsetVector& xi, std::size_t d, std::uint64_t r,
                                          std::size_t N) {
    if (xi.dim() != d) throw std::invalid_argument("offset dimension does not match d");
    if (r == 0) throw std::invalid_argument("fourier_coefficient_series needs r >= 1");
    XSeries s(N);
    const auto rr = static_cast<OffsetVector::value_type>(r);
    if (!xi.divisible_by(rr)) return s;
    const OffsetVector eta = xi.divided_by(rr);
    const std::uint64_t norm = eta.one_norm();
    for (std::uint64_t n = 0; 2 * n + norm <= N; ++n)
        s[static_cast<std::size_t>(2 * n + norm)] = to_rational(count_offset_words(n, eta));
    return s;
}

/// W_xi(x) = sum_n w_{(n, xi)} x^n through x^N (counted by order).
inline XSeries ogf_w(const OffsetVector& xi, std::size_t N, Workers workers = Workers{}) {
    XSeries s(N);
    for (std::size_t n = 0; n <= N; ++n) s[n] = to_rational(count_offset_words(n, xi, workers));
    return s;
}

namespace detail {

inline std::complex<double> determinant(std::vector<std::complex<double>> a, std::size_t n) {
    std::complex<double> det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (std::abs(a[i * n + col]) > std::abs(a[piv * n + col])) piv = i;
        if (std::abs(a[piv * n + col]) == 0.0) return 0.0;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[col * n + j], a[piv * n + j]);
            det = -det;
        }
        det *= a[col * n + col];
        for (std::size_t i = col + 1; i < n; ++i) {
            const auto f = a[i * n + col] / a[col * n + col];
            for (std::size_t j = col; j < n; ++j) a[i * n + j] -= f * a[col * n + j];
        }
    }
    return det;
}

} // namespace detail

struct DeterminantalCheck {
    std::complex<double> determinant_form;
    std::complex<double> direct_form;
    double abs_error;
    bool agrees;
};

/// Compares det(I_d - x J_d diag(z_j^r)) against 1 - x sum_j z_j^r.
inline DeterminantalCheck determinantal_check(double x, std::span<const std::complex<double>> z,
                                              std::uint64_t r, double tolerance = 1e-12) {
    const std::size_t d = z.size();
    if (d == 0) throw std::invalid_argument("determinantal check needs d >= 1");
    for (const auto& zj : z)
        if (std::abs(std::abs(zj) - 1.0) > 1e-9)
            throw std::invalid_argument("z must lie on the unit circle");
    std::vector<std::complex<double>> zr(d);
    for (std::size_t j = 0; j < d; ++j) zr[j] = std::pow(z[j], static_cast<int>(r));

    std::vector<std::complex<double>> m(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m[i * d + j] = (i == j ? 1.0 : 0.0) - x * zr[j];
    const auto det = detail::determinant(std::move(m), d);

    std::complex<double> direct = 1.0;
    for (const auto& v : zr) direct -= x * v;
    const double err = std::abs(det - direct);
    return DeterminantalCheck{det, direct, err, err < tolerance};
}

inline bool verify_determinantal(double x, std::span<const std::complex<double>> z, std::uint64_t r) {
    return determinantal_check(x, z, r).agrees;
}

} // namespace offsetwords

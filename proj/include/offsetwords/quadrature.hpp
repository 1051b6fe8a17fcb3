#pragma once

// Uniform-grid quadrature on the torus T^d. With theta_k = 2 pi k / M the grid
// average of e^{i m theta} is exactly [m = 0 mod M], so trigonometric
// polynomials of per-axis degree < M integrate exactly.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "offsetwords/errors.hpp"
#include "offsetwords/exact_core.hpp"

namespace offsetwords {

using Complex = std::complex<double>;

struct TorusGrid {
    std::size_t d;
    std::size_t points_per_axis;

    TorusGrid(std::size_t dim, std::size_t m) : d(dim), points_per_axis(m) {
        if (d == 0) throw std::invalid_argument("torus grid needs d >= 1");
        if (m == 0) throw std::invalid_argument("torus grid needs M >= 1");
    }

    double angle(std::size_t k) const {
        return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(points_per_axis);
    }
};

namespace detail {

/// Neumaier-compensated accumulator for complex values.
class CompensatedSum {
public:
    void add(Complex v) {
        add_part(re_, re_c_, v.real());
        add_part(im_, im_c_, v.imag());
    }
    Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

private:
    static void add_part(double& s, double& c, double v) {
        const double t = s + v;
        if (std::abs(s) >= std::abs(v)) c += (s - t) + v;
        else c += (v - t) + s;
        s = t;
    }
    double re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0;
};

inline Complex pairwise_sum(std::span<const Complex> v) {
    if (v.empty()) return 0.0;
    if (v.size() == 1) return v[0];
    const std::size_t h = v.size() / 2;
    return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}

inline Complex ipow(Complex base, std::uint64_t e) {
    Complex r = 1.0;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

} // namespace detail

/// Grid average of f over T^d. f receives the per-axis grid indices. Each slab
/// (fixed first index) is summed with compensation, and slabs are combined
/// pairwise in index order, so the result does not depend on `workers`.
template <class F>
Complex grid_average(const TorusGrid& grid, F&& f, Workers workers = Workers{}) {
    const std::size_t d = grid.d, M = grid.points_per_axis;
    std::vector<Complex> slabs(M);

    auto run_slab = [&](std::size_t first) {
        std::vector<std::size_t> idx(d, 0);
        idx[0] = first;
        detail::CompensatedSum acc;
        while (true) {
            acc.add(f(std::span<const std::size_t>(idx)));
            std::size_t j = 1;
            while (j < d && ++idx[j] == M) idx[j++] = 0;
            if (j == d) break;
        }
        slabs[first] = acc.value();
    };

    const std::size_t nt = std::max<std::size_t>(1, std::min<std::size_t>(workers.count, M));
    if (nt == 1) {
        for (std::size_t k = 0; k < M; ++k) run_slab(k);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < nt; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t k = t; k < M; k += nt) run_slab(k);
            });
    }
    double cells = 1;
    for (std::size_t j = 0; j < d; ++j) cells *= static_cast<double>(M);
    return detail::pairwise_sum(slabs) / cells;
}

inline void require_stable(double x, std::size_t d) {
    if (!(std::abs(x) * static_cast<double>(d) < 1.0))
        throw StabilityViolation("|x| = " + std::to_string(std::abs(x)) + " violates |x| < 1/" + std::to_string(d));
}

/// |1 - x sum_j e^{i r theta_j}|^{-2}.
inline double spectral_density_eval(double x, std::span<const double> theta, std::size_t d, std::uint64_t r) {
    if (theta.size() != d) throw std::invalid_argument("theta must have d components");
    require_stable(x, d);
    Complex p = 0.0;
    for (double t : theta) p += std::polar(1.0, static_cast<double>(r) * t);
    return 1.0 / std::norm(1.0 - x * p);
}

/// Smallest grid on which the polynomial integrand for w_{(n, xi)} integrates exactly.
inline std::size_t integral_grid_threshold(std::uint64_t n, const OffsetVector& xi) {
    return static_cast<std::size_t>(2 * (2 * n + xi.one_norm()) + 1);
}

/// Grid evaluation of the integral representation
///   w_{(n, xi)} = avg e^{-i xi.theta} p^{n+|xi^+|} conj(p)^{n+|xi^-|},  p = sum_j e^{i theta_j}.
/// Real part approximates the count; the imaginary part is rounding noise.
inline Complex integral_count(std::uint64_t n, const OffsetVector& xi, std::size_t M = 0,
                              Workers workers = Workers{}) {
    const std::size_t need = integral_grid_threshold(n, xi);
    if (M == 0) M = need;
    if (M < need)
        throw std::invalid_argument("grid size " + std::to_string(M) + " below exactness threshold " +
                                    std::to_string(need));
    const TorusGrid grid(xi.dim(), M);
    std::vector<Complex> roots(M);
    for (std::size_t k = 0; k < M; ++k) roots[k] = std::polar(1.0, grid.angle(k));

    const std::uint64_t a = n + xi.plus_norm(), b = n + xi.minus_norm();
    const auto Mi = static_cast<std::int64_t>(M);
    return grid_average(
        grid,
        [&](std::span<const std::size_t> idx) {
            Complex p = 0.0, phase = 1.0;
            for (std::size_t j = 0; j < idx.size(); ++j) {
                p += roots[idx[j]];
                std::int64_t e = (-xi[j] * static_cast<std::int64_t>(idx[j])) % Mi;
                if (e < 0) e += Mi;
                phase *= roots[static_cast<std::size_t>(e)];
            }
            return phase * detail::ipow(p, a) * detail::ipow(std::conj(p), b);
        },
        workers);
}

/// Grid average of e^{-i xi.theta} S(x, theta) for the spectral density of
/// 1 - x p_{r,d}. The integrand is analytic, so the error decays geometrically in M.
inline Complex fourier_coefficient_numeric(const OffsetVector& xi, double x, std::size_t d, std::uint64_t r,
                                           std::size_t M = 64, Workers workers = Workers{}) {
    if (xi.dim() != d) throw std::invalid_argument("offset dimension does not match d");
    require_stable(x, d);
    const TorusGrid grid(d, M);
    std::vector<Complex> roots(M);
    for (std::size_t k = 0; k < M; ++k) roots[k] = std::polar(1.0, grid.angle(k));
    const auto Mi = static_cast<std::int64_t>(M);
    const auto ri = static_cast<std::int64_t>(r);
    return grid_average(
        grid,
        [&](std::span<const std::size_t> idx) {
            Complex p = 0.0, phase = 1.0;
            for (std::size_t j = 0; j < d; ++j) {
                const auto k = static_cast<std::int64_t>(idx[j]);
                p += roots[static_cast<std::size_t>((ri * k) % Mi)];
                std::int64_t e = (-xi[j] * k) % Mi;
                if (e < 0) e += Mi;
                phase *= roots[static_cast<std::size_t>(e)];
            }
            return phase / std::norm(1.0 - x * p);
        },
        workers);
}

struct CheckedCoefficient {
    Complex value;   // at 2M
    Complex coarse;  // at M
    bool converged;
};

/// fourier_coefficient_numeric at M and 2M; converged iff they agree within tolerance.
inline CheckedCoefficient fourier_coefficient_checked(const OffsetVector& xi, double x, std::size_t d,
                                                      std::uint64_t r, std::size_t M = 64,
                                                      double tolerance = 1e-8, Workers workers = Workers{}) {
    const Complex coarse = fourier_coefficient_numeric(xi, x, d, r, M, workers);
    const Complex fine = fourier_coefficient_numeric(xi, x, d, r, 2 * M, workers);
    return CheckedCoefficient{fine, coarse, std::abs(fine - coarse) <= tolerance};
}

/// Upper bound on sum_{n > N} w_{(n, eta)} x^{2n + |eta|_1}, using w_{(n, eta)} <= d^{2n + |eta|_1}
/// (each string has at most one split with a given offset).
inline double fourier_tail_bound(const OffsetVector& eta, double x, std::uint64_t N) {
    const double q = static_cast<double>(eta.dim()) * std::abs(x);
    if (q * q >= 1.0) return INFINITY;
    return std::pow(q, static_cast<double>(eta.one_norm())) * std::pow(q * q, static_cast<double>(N + 1)) /
           (1.0 - q * q);
}

} // namespace offsetwords

#pragma once

// Exact machinery behind the large-dimension formula: the normalized modified
// Bessel series, its formal logarithm (Bessel zeta values at even integers),
// complete Bell polynomials, and the resulting closed forms for w_{(n, m 1_d)}.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "offsetwords/errors.hpp"
#include "offsetwords/exact_core.hpp"
#include "offsetwords/xseries.hpp"

namespace offsetwords {

/// Normalized Bessel series in u = (z/2)^2: [u^n] = nu! / (n! (n + nu)!).
inline XSeries normalized_bessel_series(std::uint64_t nu, std::size_t N) {
    XSeries s(N);
    const BigCount nf = factorial(nu);
    for (std::size_t n = 0; n <= N; ++n) s[n] = Rational(nf, factorial(n) * factorial(n + nu));
    return s;
}

/// zeta_nu(2k) for k = 1..n, read off the formal logarithm of the normalized
/// Bessel series. With u = z^2 / 4, log I~_nu = sum_k ((-1)^{k+1}/k) zeta_nu(2k) 4^k u^k.
inline std::vector<Rational> bessel_zeta_values(std::uint64_t nu, std::size_t n) {
    std::vector<Rational> out;
    if (n == 0) return out;
    const XSeries lg = normalized_bessel_series(nu, n).log();
    for (std::size_t k = 1; k <= n; ++k) {
        Rational z = lg[k] * Rational(static_cast<long>(k)) / Rational(BigCount(1) << (2 * k));
        out.push_back(k % 2 == 0 ? Rational(-z) : z);
    }
    return out;
}

inline Rational bessel_zeta_even(std::uint64_t nu, std::size_t n) {
    if (n == 0) throw std::invalid_argument("bessel_zeta_even needs n >= 1");
    return bessel_zeta_values(nu, n).back();
}

namespace detail {

/// Exact determinant over Q by Gaussian elimination with nonzero pivoting.
inline Rational rational_determinant(std::vector<Rational> a, std::size_t n) {
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv * n + col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[col * n + j], a[piv * n + j]);
            det = -det;
        }
        const Rational p = a[col * n + col];
        det *= p;
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i * n + col] == 0) continue;
            const Rational f = a[i * n + col] / p;
            for (std::size_t j = col; j < n; ++j) a[i * n + j] -= f * a[col * n + j];
        }
    }
    return det;
}

} // namespace detail

/// B_n(a_1..a_n) as n! [t^n] exp(sum_k a_k t^k / k!).
inline Rational complete_bell_exp(std::span<const Rational> a) {
    const std::size_t n = a.size();
    XSeries g(n);
    for (std::size_t k = 1; k <= n; ++k) g[k] = a[k - 1] / to_rational(factorial(k));
    return g.exp()[n] * to_rational(factorial(n));
}

/// B_n(a_1..a_n) as the determinant of the lower-Hessenberg matrix with
/// entries C(i, j) a_{i-j+1} on and below the diagonal and -1 on the superdiagonal.
inline Rational complete_bell_det(std::span<const Rational> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    std::vector<Rational> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) m[i * n + j] = to_rational(binomial(i, j)) * a[i - j];
        if (i + 1 < n) m[i * n + i + 1] = -1;
    }
    return detail::rational_determinant(std::move(m), n);
}

/// Complete Bell polynomial; both routes are evaluated and must agree.
inline Rational complete_bell(std::span<const Rational> a) {
    const Rational via_exp = complete_bell_exp(a);
    const Rational via_det = complete_bell_det(a);
    if (via_exp != via_det)
        throw InternalMismatch("complete Bell routes disagree at n = " + std::to_string(a.size()) + ": " +
                               via_exp.str() + " vs " + via_det.str());
    return via_exp;
}

/// a_k = (-1)^{k-1} (k-1)! zeta_nu(2k) d for k = 1..n.
inline std::vector<Rational> bell_coefficients(std::size_t n, std::uint64_t nu, std::uint64_t d) {
    std::vector<Rational> a;
    a.reserve(n);
    if (n == 0) return a;
    const auto zeta = bessel_zeta_values(nu, n);
    for (std::size_t k = 1; k <= n; ++k) {
        Rational v = to_rational(factorial(k - 1)) * zeta[k - 1] * Rational(static_cast<long>(d));
        a.push_back(k % 2 == 0 ? Rational(-v) : v);
    }
    return a;
}

/// B_n^{(nu)}(d) = 4^n (n+nu)!/nu! B_n(a_1^{(nu)}(d), ..., a_n^{(nu)}(d)).
inline Rational bell_B(std::size_t n, std::uint64_t nu, std::uint64_t d) {
    const auto a = bell_coefficients(n, nu, d);
    return Rational(BigCount(1) << (2 * n)) * Rational(factorial(n + nu), factorial(nu)) * complete_bell(a);
}

/// B_n^{(nu)}(d) read directly off the d-th power of the normalized Bessel series:
/// [u^n] (I~_nu)^d = nu!/(n!(n+nu)!) B_n^{(nu)}(d).
inline Rational bell_B_series(std::size_t n, std::uint64_t nu, std::uint64_t d) {
    const Rational c = normalized_bessel_series(nu, n).pow(d)[n];
    return c * Rational(factorial(n) * factorial(n + nu), factorial(nu));
}

/// w_{(n, m 1_d)} through the Bessel power and through the Bell closed form.
/// Both routes must produce the same nonnegative integer.
inline BigCount w_via_bessel(std::uint64_t n, std::int64_t m, std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("w_via_bessel needs d >= 1");
    const auto am = static_cast<std::uint64_t>(m < 0 ? -m : m);
    const BigCount mf = factorial(am);
    BigCount mfd = 1;
    for (std::uint64_t j = 0; j < d; ++j) mfd *= mf;
    const Rational scale(factorial(n + d * am), mfd);

    const Rational coeff = normalized_bessel_series(am, static_cast<std::size_t>(n)).pow(d)[static_cast<std::size_t>(n)];
    const Rational via_power = to_rational(factorial(n)) * scale * coeff;

    const auto a = bell_coefficients(static_cast<std::size_t>(n), am, d);
    const Rational via_bell = Rational(BigCount(1) << (2 * n)) * scale * complete_bell(a);

    if (via_power != via_bell)
        throw InternalMismatch("Bessel power and Bell routes disagree: " + via_power.str() + " vs " + via_bell.str());
    if (!is_integer(via_power) || via_power < 0)
        throw InternalMismatch("w_via_bessel produced a non-integer " + via_power.str());
    return numerator_of(via_power);
}

} // namespace offsetwords

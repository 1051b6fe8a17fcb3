#include <gtest/gtest.h>

#include <complex>
#include <functional>
#include <numbers>
#include <random>

#include "offsetwords/errors.hpp"
#include "offsetwords/json_io.hpp"
#include "offsetwords/series_engine.hpp"
#include "oracles.hpp"

using namespace offsetwords;

namespace {

XSeries ints(std::vector<long> v) {
    std::vector<Rational> c;
    for (long x : v) c.emplace_back(x);
    return XSeries(std::move(c));
}

void for_each_small_offset(std::size_t d, std::int64_t max_norm, const std::function<void(const OffsetVector&)>& f) {
    std::vector<std::int64_t> v(d);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t j, std::int64_t left) {
        if (j == d) return f(OffsetVector(v));
        for (std::int64_t x = -left; x <= left; ++x) {
            v[j] = x;
            rec(j + 1, left - (x < 0 ? -x : x));
        }
    };
    rec(0, max_norm);
}

} // namespace

TEST(XSeries, ArithmeticRespectsTruncation) {
    const XSeries a = ints({1, 2, 3, 4});
    const XSeries b = ints({1, -1});
    const XSeries p = a * b;
    EXPECT_EQ(p.truncation(), 1u);
    EXPECT_EQ(p, ints({1, 1}));
    XSeries s = a;
    s += b;
    EXPECT_EQ(s, ints({2, 1}));
    EXPECT_EQ(a.pow(0), ints({1, 0, 0, 0}));
    EXPECT_EQ(ints({1, 1, 0, 0}).pow(3), ints({1, 3, 3, 1}));
}

TEST(XSeries, InverseLogExp) {
    const XSeries geo = ints({1, -1, 0, 0, 0, 0}).inverse();
    EXPECT_EQ(geo, ints({1, 1, 1, 1, 1, 1}));

    // log(1/(1-x)) = sum x^k / k
    const XSeries lg = geo.log();
    for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(lg[k], Rational(1, static_cast<long>(k)));
    EXPECT_EQ(lg[0], 0);
    EXPECT_EQ(lg.exp(), geo);

    // exp(x) coefficients 1/k!
    XSeries x(6);
    x[1] = 1;
    const XSeries e = x.exp();
    for (std::size_t k = 0; k <= 6; ++k) EXPECT_EQ(e[k], Rational(1, static_cast<long>(oracle::factorial(k).convert_to<long>())));

    EXPECT_THROW(ints({2, 1}).log(), std::domain_error);
    EXPECT_THROW(ints({1, 1}).exp(), std::domain_error);
    EXPECT_THROW(ints({0, 1}).inverse(), std::domain_error);
}

TEST(XSeries, Evaluate) {
    EXPECT_DOUBLE_EQ(ints({1, 8, 54}).evaluate(0.1), 1 + 0.8 + 0.54);
}

TEST(SpectralSeries, OneDimensionalEntries) {
    const LaurentTable t = spectral_series(1, 1, 8);
    EXPECT_EQ(t.at(OffsetVector{0})[0], 1);
    for (std::int64_t m = -8; m <= 8; ++m)
        for (std::size_t n = 0; n <= 8; ++n) {
            const auto am = static_cast<std::size_t>(m < 0 ? -m : m);
            const bool live = n >= am && (n - am) % 2 == 0;
            EXPECT_EQ(t.at(OffsetVector{m})[n], live ? 1 : 0) << "m=" << m << " n=" << n;
        }
}

TEST(SpectralSeries, MatchesPolynomialExpansion) {
    for (std::size_t d = 1; d <= 3; ++d)
        for (long r : {1L, 2L}) {
            const std::size_t N = d == 3 ? 4 : 6;
            const LaurentTable t = spectral_series(d, static_cast<std::uint64_t>(r), N);
            for (unsigned n = 0; n <= N; ++n) {
                const auto poly = oracle::spectral_power(d, r, n);
                for (const auto& [e, c] : poly) {
                    const OffsetVector eta(std::vector<std::int64_t>(e.begin(), e.end()));
                    EXPECT_EQ(t.at(eta)[n], Rational(BigCount(c.str()))) << eta << " n=" << n;
                }
                // nothing outside the polynomial's support
                for (const auto& [eta, s] : t.entries()) {
                    std::vector<long> e(eta.components().begin(), eta.components().end());
                    if (!poly.count(e)) {
                        EXPECT_EQ(s[n], 0) << eta << " n=" << n;
                    }
                }
            }
        }
}

TEST(SpectralSeries, TwoDimensionalOriginAtSecondPower) {
    // [x^2] at the origin: z1 zbar1 + z2 zbar2 terms of (z1+z2)(zbar1+zbar2), so 2
    EXPECT_EQ(spectral_series(2, 1, 2).at(OffsetVector{0, 0})[2], 2);
}

TEST(SpectralSeries, SupportWithinNorm) {
    const LaurentTable t = spectral_series(3, 1, 6);
    for (const auto& [eta, s] : t.entries()) EXPECT_LE(eta.one_norm(), 6u);
    const LaurentTable t2 = spectral_series(2, 3, 5);
    for (const auto& [eta, s] : t2.entries()) {
        EXPECT_TRUE(eta.divisible_by(3));
        EXPECT_LE(eta.divided_by(3).one_norm(), 5u);
    }
}

TEST(SpectralSeries, MassIsNPlusOneTimesDToTheN) {
    for (std::size_t d = 1; d <= 4; ++d) {
        const std::size_t N = 6;
        const LaurentTable t = spectral_series(d, 1, N);
        for (std::size_t n = 0; n <= N; ++n) {
            Rational mass = 0;
            for (const auto& [eta, s] : t.entries()) mass += s[n];
            BigCount expect = n + 1;
            for (std::size_t i = 0; i < n; ++i) expect *= d;
            EXPECT_EQ(mass, Rational(expect)) << "d=" << d << " n=" << n;
        }
    }
}

TEST(SpectralSeries, CapAndArgumentErrors) {
    EXPECT_THROW(spectral_series(2, 1, 41), BudgetExceeded);
    EXPECT_THROW(spectral_series(4, 1, 17), BudgetExceeded);
    EXPECT_NO_THROW(spectral_series(2, 1, 3, 3));
    EXPECT_THROW(spectral_series(0, 1, 3), std::invalid_argument);
    EXPECT_THROW(spectral_series(2, 0, 3), std::invalid_argument);
}

TEST(FourierCoefficientSeries, Examples) {
    EXPECT_EQ(fourier_coefficient_series(OffsetVector{1, 0}, 2, 1, 5), ints({0, 1, 0, 3, 0, 10}));
    EXPECT_TRUE(fourier_coefficient_series(OffsetVector{1, 0}, 2, 2, 5).is_zero());
    EXPECT_EQ(fourier_coefficient_series(OffsetVector{0, 0, 0}, 3, 1, 4), ints({1, 0, 3, 0, 15}));
    EXPECT_THROW(fourier_coefficient_series(OffsetVector{1, 0}, 3, 1, 4), std::invalid_argument);
}

TEST(FourierCoefficientSeries, ExtractionConsistency) {
    for (std::size_t d = 1; d <= 3; ++d) {
        const std::size_t N = 8;
        const LaurentTable t = spectral_series(d, 1, N);
        for_each_small_offset(d, 3, [&](const OffsetVector& xi) {
            const XSeries f = fourier_coefficient_series(xi, d, 1, N);
            EXPECT_EQ(t.at(xi), f) << xi;
            for (std::size_t n = 0; n <= N; ++n)
                if (n < xi.one_norm() || (n - xi.one_norm()) % 2) {
                    EXPECT_EQ(f[n], 0) << xi << " n=" << n;
                }
        });
    }
}

TEST(FourierCoefficientSeries, RDivisibility) {
    for (std::size_t d = 1; d <= 3; ++d)
        for (std::uint64_t r : {2u, 3u}) {
            const std::size_t N = 6;
            const LaurentTable tr = spectral_series(d, r, N);
            const LaurentTable t1 = spectral_series(d, 1, N);
            for_each_small_offset(d, 4, [&](const OffsetVector& xi) {
                const auto ri = static_cast<std::int64_t>(r);
                const XSeries f = fourier_coefficient_series(xi, d, r, N);
                if (!xi.divisible_by(ri)) {
                    EXPECT_TRUE(f.is_zero()) << xi;
                    EXPECT_TRUE(tr.at(xi).is_zero()) << xi;
                } else {
                    const OffsetVector eta = xi.divided_by(ri);
                    EXPECT_EQ(f, fourier_coefficient_series(eta, d, 1, N)) << xi;
                    EXPECT_EQ(tr.at(xi), t1.at(eta)) << xi;
                }
            });
        }
}

TEST(OgfW, Examples) {
    EXPECT_EQ(ogf_w(OffsetVector::zero(3), 3), ints({1, 3, 15, 93}));
    EXPECT_EQ(ogf_w(OffsetVector{1, 0}, 2), ints({1, 3, 10}));
    for (std::int64_t m : {-2, 0, 3}) EXPECT_EQ(ogf_w(OffsetVector{m}, 3), ints({1, 1, 1, 1}));
    EXPECT_EQ(ogf_w(OffsetVector{1, -1, 2}, 6, Workers{4}), ogf_w(OffsetVector{1, -1, 2}, 6, Workers{1}));
}

TEST(Determinantal, Examples) {
    const std::vector<std::complex<double>> z3{1.0, {0.0, 1.0}, -1.0};
    EXPECT_TRUE(verify_determinantal(0.0, z3, 1));
    EXPECT_TRUE(verify_determinantal(0.2, z3, 1));
    const std::vector<std::complex<double>> z1{std::polar(1.0, 0.7)};
    EXPECT_TRUE(verify_determinantal(0.3, z1, 3));
    const auto chk = determinantal_check(0.2, z3, 1);
    EXPECT_NEAR(std::abs(chk.direct_form - std::complex<double>(1.0, -0.2)), 0.0, 1e-15);
    const std::vector<std::complex<double>> off{2.0};
    EXPECT_THROW(verify_determinantal(0.1, off, 1), std::invalid_argument);
}

TEST(Determinantal, AgreesWithCofactorExpansion) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t d = 1 + rng() % 5;
        const double x = 0.5 * std::ldexp(static_cast<double>(rng() >> 11), -53);
        std::vector<std::complex<double>> z(d);
        for (auto& v : z) v = std::polar(1.0, u(rng));
        const int r = 1 + static_cast<int>(rng() % 4);
        std::vector<std::vector<std::complex<double>>> m(d, std::vector<std::complex<double>>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m[i][j] = (i == j ? 1.0 : 0.0) - x * std::pow(z[j], r);
        const auto chk = determinantal_check(x, z, static_cast<std::uint64_t>(r));
        EXPECT_NEAR(std::abs(chk.determinant_form - oracle::cofactor_det(m)), 0.0, 1e-12);
        EXPECT_TRUE(chk.agrees);
    }
}

TEST(JsonIo, SeriesRoundTripAndSchema) {
    XSeries s(3);
    s[0] = 1;
    s[1] = Rational(-3, 4);
    s[3] = Rational(BigCount("123456789012345678901234567890"), 7);
    const Json j = to_json(s);
    EXPECT_EQ(j.at("truncation"), 3);
    EXPECT_EQ(j.at("coeffs")[1], Json::array({"-3", "4"}));
    EXPECT_EQ(xseries_from_json(j), s);
    EXPECT_EQ(j.dump(), to_json(xseries_from_json(j)).dump());
}

TEST(JsonIo, TableRoundTrip) {
    const LaurentTable t = spectral_series(2, 1, 5);
    const Json j = to_json(t);
    EXPECT_EQ(j.at("d"), 2);
    const LaurentTable back = laurent_table_from_json(j);
    ASSERT_EQ(back.entries().size(), t.entries().size());
    for (const auto& [eta, s] : t.entries()) EXPECT_EQ(back.at(eta), s);
    EXPECT_EQ(to_json(back).dump(), j.dump());
}

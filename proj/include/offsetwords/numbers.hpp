#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace offsetwords {

/// Exact nonnegative counts. GMP-backed so multinomials at n ~ 300 stay cheap.
using BigCount = boost::multiprecision::mpz_int;
/// Exact rationals for series coefficients.
using Rational = boost::multiprecision::mpq_rational;

inline BigCount binomial(std::uint64_t n, std::uint64_t k) {
    BigCount r;
    if (k > n) return r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

inline BigCount factorial(std::uint64_t n) {
    BigCount r;
    mpz_fac_ui(r.backend().data(), n);
    return r;
}

inline BigCount lcm(const BigCount& a, const BigCount& b) {
    BigCount r;
    mpz_lcm(r.backend().data(), a.backend().data(), b.backend().data());
    return r;
}

/// Natural log of a positive big integer without overflow.
inline double log_of(const BigCount& v) {
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, v.backend().data());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

inline std::string to_decimal(const BigCount& v) { return v.str(); }

inline Rational to_rational(const BigCount& v) { return Rational(v); }

inline BigCount numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigCount denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

} // namespace offsetwords

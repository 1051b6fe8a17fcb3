#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "offsetwords/numbers.hpp"

namespace offsetwords {

/// Truncated power series sum_{k <= N} c_k x^k with exact rational
/// coefficients. Binary operations truncate to the smaller order.
class XSeries {
public:
    explicit XSeries(std::size_t truncation = 0) : c_(truncation + 1) {}
    XSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.resize(1);
    }

    static XSeries constant(const Rational& v, std::size_t truncation) {
        XSeries s(truncation);
        s.c_[0] = v;
        return s;
    }
    static XSeries from_counts(const std::vector<BigCount>& coeffs) {
        std::vector<Rational> c(coeffs.begin(), coeffs.end());
        return XSeries(std::move(c));
    }

    std::size_t truncation() const noexcept { return c_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return c_.at(k); }
    Rational& operator[](std::size_t k) { return c_.at(k); }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
    }

    XSeries truncated(std::size_t order) const {
        if (order > truncation()) throw std::invalid_argument("cannot raise truncation order");
        return XSeries(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
    }

    XSeries& operator+=(const XSeries& o) {
        shrink_to(o.truncation());
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    XSeries& operator-=(const XSeries& o) {
        shrink_to(o.truncation());
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    XSeries& operator*=(const Rational& s) {
        for (auto& q : c_) q *= s;
        return *this;
    }

    friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
    friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }
    friend XSeries operator*(XSeries a, const Rational& s) { return a *= s; }

    friend XSeries operator*(const XSeries& a, const XSeries& b) {
        const std::size_t N = std::min(a.truncation(), b.truncation());
        XSeries r(N);
        for (std::size_t i = 0; i <= N; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j <= N; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    /// Nonnegative integer power by repeated squaring.
    XSeries pow(std::uint64_t e) const {
        XSeries result = constant(Rational(1), truncation());
        XSeries base = *this;
        while (e) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    XSeries inverse() const {
        if (c_[0] == 0) throw std::domain_error("series inverse needs a nonzero constant term");
        const std::size_t N = truncation();
        XSeries r(N);
        r.c_[0] = Rational(1) / c_[0];
        for (std::size_t k = 1; k <= N; ++k) {
            Rational s = 0;
            for (std::size_t j = 1; j <= k; ++j) s += c_[j] * r.c_[k - j];
            r.c_[k] = -s * r.c_[0];
        }
        return r;
    }

    XSeries derivative() const {
        const std::size_t N = truncation();
        XSeries r(N == 0 ? 0 : N - 1);
        for (std::size_t k = 1; k <= N; ++k) r.c_[k - 1] = c_[k] * Rational(k);
        return r;
    }

    /// Formal logarithm; needs constant term exactly 1.
    XSeries log() const {
        if (c_[0] != 1) throw std::domain_error("formal log needs constant term 1");
        const std::size_t N = truncation();
        // (log f)' = f'/f, with zero constant of integration
        XSeries r(N);
        if (N == 0) return r;
        const XSeries q = derivative() * truncated(N - 1).inverse();
        for (std::size_t k = 1; k <= N; ++k) r.c_[k] = q.c_[k - 1] / Rational(k);
        return r;
    }

    /// Formal exponential; needs constant term exactly 0.
    XSeries exp() const {
        if (c_[0] != 0) throw std::domain_error("formal exp needs constant term 0");
        const std::size_t N = truncation();
        XSeries e(N);
        e.c_[0] = 1;
        // k e_k = sum_{j=1}^k j g_j e_{k-j}
        for (std::size_t k = 1; k <= N; ++k) {
            Rational s = 0;
            for (std::size_t j = 1; j <= k; ++j) s += Rational(j) * c_[j] * e.c_[k - j];
            e.c_[k] = s / Rational(k);
        }
        return e;
    }

    double evaluate(double x) const {
        double acc = 0.0;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + to_double(c_[k]);
        return acc;
    }

    friend bool operator==(const XSeries& a, const XSeries& b) { return a.c_ == b.c_; }

private:
    void shrink_to(std::size_t order) {
        if (order < truncation()) c_.resize(order + 1);
    }

    std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const XSeries& s) {
    bool first = true;
    for (std::size_t k = 0; k <= s.truncation(); ++k) {
        if (s[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << s[k];
        if (k) os << "*x^" << k;
    }
    if (first) os << "0";
    return os << " + O(x^" << s.truncation() + 1 << ")";
}

} // namespace offsetwords

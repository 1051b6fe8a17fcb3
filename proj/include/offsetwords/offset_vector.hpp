#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace offsetwords {

/// Nonnegative integer vector (Parikh vectors, compositions, sign parts).
using Counts = std::vector<std::uint64_t>;

inline std::uint64_t total(std::span<const std::uint64_t> a) {
    return std::accumulate(a.begin(), a.end(), std::uint64_t{0});
}

/// An integer vector xi in Z^d labelling an offset class. d >= 1.
class OffsetVector {
public:
    using value_type = std::int64_t;

    explicit OffsetVector(std::vector<value_type> components) : c_(std::move(components)) {
        if (c_.empty()) throw std::invalid_argument("offset vector needs dimension d >= 1");
    }
    OffsetVector(std::initializer_list<value_type> components)
        : OffsetVector(std::vector<value_type>(components)) {}

    static OffsetVector zero(std::size_t d) { return OffsetVector(std::vector<value_type>(d, 0)); }
    static OffsetVector constant(std::size_t d, value_type m) {
        return OffsetVector(std::vector<value_type>(d, m));
    }

    std::size_t dim() const noexcept { return c_.size(); }
    value_type operator[](std::size_t j) const { return c_[j]; }
    std::span<const value_type> components() const noexcept { return c_; }

    std::uint64_t one_norm() const noexcept {
        std::uint64_t s = 0;
        for (auto v : c_) s += static_cast<std::uint64_t>(v < 0 ? -v : v);
        return s;
    }

    /// |xi^+|, the total of the positive parts.
    std::uint64_t plus_norm() const noexcept {
        std::uint64_t s = 0;
        for (auto v : c_) s += v > 0 ? static_cast<std::uint64_t>(v) : 0;
        return s;
    }
    /// |xi^-|, the total of the negative parts.
    std::uint64_t minus_norm() const noexcept { return one_norm() - plus_norm(); }

    bool is_zero() const noexcept {
        for (auto v : c_)
            if (v != 0) return false;
        return true;
    }

    OffsetVector operator-() const {
        std::vector<value_type> out(c_);
        for (auto& v : out) v = -v;
        return OffsetVector(std::move(out));
    }

    OffsetVector scaled(value_type k) const {
        std::vector<value_type> out(c_);
        for (auto& v : out) v *= k;
        return OffsetVector(std::move(out));
    }

    bool divisible_by(value_type r) const noexcept {
        for (auto v : c_)
            if (v % r != 0) return false;
        return true;
    }

    /// Component-wise exact division; caller checks divisible_by first.
    OffsetVector divided_by(value_type r) const {
        if (!divisible_by(r)) throw std::invalid_argument("offset vector not divisible");
        std::vector<value_type> out(c_);
        for (auto& v : out) v /= r;
        return OffsetVector(std::move(out));
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (j) s += ",";
            s += std::to_string(c_[j]);
        }
        return s + ")";
    }

    friend auto operator<=>(const OffsetVector&, const OffsetVector&) = default;
    friend bool operator==(const OffsetVector&, const OffsetVector&) = default;

private:
    std::vector<value_type> c_;
};

inline std::ostream& operator<<(std::ostream& os, const OffsetVector& xi) { return os << xi.str(); }

/// xi = plus - minus with disjoint supports.
struct SignSplit {
    Counts plus;
    Counts minus;

    friend bool operator==(const SignSplit&, const SignSplit&) = default;
};

inline SignSplit sign_split(const OffsetVector& xi) {
    SignSplit s{Counts(xi.dim(), 0), Counts(xi.dim(), 0)};
    for (std::size_t j = 0; j < xi.dim(); ++j) {
        if (xi[j] > 0) s.plus[j] = static_cast<std::uint64_t>(xi[j]);
        else s.minus[j] = static_cast<std::uint64_t>(-xi[j]);
    }
    return s;
}

/// Character multiplicities of a string over [1:d].
struct ParikhVector {
    Counts counts;

    std::size_t dim() const noexcept { return counts.size(); }
    std::uint64_t length() const noexcept { return total(counts); }

    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
};

/// Offset of a Parikh difference p - q.
inline OffsetVector difference(const ParikhVector& p, const ParikhVector& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("Parikh vectors of different dimension");
    std::vector<OffsetVector::value_type> out(p.dim());
    for (std::size_t j = 0; j < p.dim(); ++j)
        out[j] = static_cast<OffsetVector::value_type>(p.counts[j]) -
                 static_cast<OffsetVector::value_type>(q.counts[j]);
    return OffsetVector(std::move(out));
}

/// (order n, offset xi); a string carrying it has length 2n + |xi|_1.
struct SplitLabel {
    std::uint64_t order;
    OffsetVector offset;

    std::uint64_t string_length() const noexcept { return 2 * order + offset.one_norm(); }

    friend bool operator==(const SplitLabel&, const SplitLabel&) = default;
};

} // namespace offsetwords

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "offsetwords/exact_core.hpp"

namespace offsetwords {

/// A subset S = {s_1 < ... < s_t} of [1:d] with 1 <= t <= d-1; T is its complement.
class AlphabetSplit {
public:
    AlphabetSplit(std::vector<std::size_t> selected, std::size_t d) : s_(std::move(selected)), d_(d) {
        if (d < 2) throw std::invalid_argument("alphabet split needs d >= 2");
        if (s_.empty() || s_.size() > d - 1) throw std::invalid_argument("split size must be in [1, d-1]");
        for (std::size_t i = 0; i < s_.size(); ++i) {
            if (s_[i] < 1 || s_[i] > d) throw std::invalid_argument("split letter outside [1:d]");
            if (i && s_[i] <= s_[i - 1]) throw std::invalid_argument("split letters must increase strictly");
        }
    }

    std::size_t dim() const noexcept { return d_; }
    const std::vector<std::size_t>& selected() const noexcept { return s_; }

    std::vector<std::size_t> complement() const {
        std::vector<std::size_t> t;
        for (std::size_t a = 1; a <= d_; ++a)
            if (!std::binary_search(s_.begin(), s_.end(), a)) t.push_back(a);
        return t;
    }

    /// Every valid split of [1:d], each subset once.
    static std::vector<AlphabetSplit> all(std::size_t d) {
        std::vector<AlphabetSplit> out;
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << d); ++mask) {
            std::vector<std::size_t> s;
            for (std::size_t a = 0; a < d; ++a)
                if (mask >> a & 1) s.push_back(a + 1);
            out.emplace_back(std::move(s), d);
        }
        return out;
    }

private:
    std::vector<std::size_t> s_;
    std::size_t d_;
};

inline OffsetVector restrict_to(const OffsetVector& xi, const std::vector<std::size_t>& letters) {
    std::vector<OffsetVector::value_type> out;
    out.reserve(letters.size());
    for (auto a : letters) out.push_back(xi[a - 1]);
    return OffsetVector(std::move(out));
}

/// Right-hand side of the split-alphabet recurrence
///   sum_j C(n+|xi^+|, j + |xi_S^+|) C(n+|xi^-|, j + |xi_S^-|) w_{(j, xi_S)} w_{(n-j, xi_T)},
/// with the sub-counts taken from count_offset_words.
inline BigCount recurrence_count(std::uint64_t n, const OffsetVector& xi, const AlphabetSplit& split) {
    if (xi.dim() < 2) throw std::invalid_argument("recurrence needs d >= 2");
    if (split.dim() != xi.dim()) throw std::invalid_argument("split dimension does not match xi");
    const OffsetVector xs = restrict_to(xi, split.selected());
    const OffsetVector xt = restrict_to(xi, split.complement());
    const std::uint64_t plus = xi.plus_norm(), minus = xi.minus_norm();
    const std::uint64_t s_plus = xs.plus_norm(), s_minus = xs.minus_norm();

    BigCount acc = 0;
    for (std::uint64_t j = 0; j <= n; ++j)
        acc += binomial(n + plus, j + s_plus) * binomial(n + minus, j + s_minus) *
               count_offset_words(j, xs) * count_offset_words(n - j, xt);
    return acc;
}

/// lcm(1, 2, ..., max_{a != 0} o_a(xi)), o_a counting occurrences of a in xi.
inline BigCount divisibility_modulus(const OffsetVector& xi) {
    if (xi.dim() < 2) throw std::invalid_argument("divisibility modulus needs d >= 2");
    if (xi.is_zero()) throw std::invalid_argument("divisibility modulus needs xi != 0");
    std::map<OffsetVector::value_type, std::uint64_t> occurrences;
    for (auto v : xi.components())
        if (v != 0) ++occurrences[v];
    std::uint64_t top = 0;
    for (const auto& [v, o] : occurrences) top = std::max(top, o);
    BigCount m = 1;
    for (std::uint64_t k = 2; k <= top; ++k) m = lcm(m, BigCount(k));
    return m;
}

inline bool is_constant_vector(const OffsetVector& xi) {
    const auto c = xi.components();
    return std::all_of(c.begin(), c.end(), [&](auto v) { return v == c[0]; });
}

/// Checks w_{(n, xi)} against every divisibility certificate that applies:
/// the lcm modulus when d >= 2 and xi != 0, and d itself when xi = m 1_d with
/// (n, m) != (0, 0).
inline bool check_divisibility(std::uint64_t n, const OffsetVector& xi) {
    const BigCount w = count_offset_words(n, xi);
    if (xi.dim() >= 2 && !xi.is_zero() && w % divisibility_modulus(xi) != 0) return false;
    if (is_constant_vector(xi) && (n != 0 || !xi.is_zero()) && w % BigCount(xi.dim()) != 0) return false;
    return true;
}

} // namespace offsetwords

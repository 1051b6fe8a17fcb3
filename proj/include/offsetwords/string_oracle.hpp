#pragma once

// Brute-force ground truth: generate every string and test membership by
// definition. Nothing here touches the counting formulas.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "offsetwords/errors.hpp"
#include "offsetwords/exact_core.hpp"

namespace offsetwords {

struct OracleBudget {
    std::size_t max_total_length = 32;
    std::size_t max_alphabet = 16;
    /// Cap on the number of generated strings.
    std::uint64_t max_strings = 10'000'000;
};

namespace detail {

/// d^L, saturating at UINT64_MAX.
inline std::uint64_t saturating_power(std::uint64_t d, std::uint64_t L) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < L; ++i) {
        if (d != 0 && r > std::numeric_limits<std::uint64_t>::max() / d)
            return std::numeric_limits<std::uint64_t>::max();
        r *= d;
    }
    return r;
}

inline void check_budget(std::size_t d, std::uint64_t length, std::uint64_t strings,
                         const OracleBudget& budget) {
    if (d > budget.max_alphabet)
        throw BudgetExceeded("oracle: alphabet size " + std::to_string(d) + " exceeds cap " +
                             std::to_string(budget.max_alphabet));
    if (length > budget.max_total_length)
        throw BudgetExceeded("oracle: string length " + std::to_string(length) + " exceeds cap " +
                             std::to_string(budget.max_total_length));
    if (strings > budget.max_strings)
        throw BudgetExceeded("oracle: " + std::to_string(strings) +
                             " strings to generate exceeds cap " +
                             std::to_string(budget.max_strings));
}

/// Odometer over [1:d]^L. Returns false after the last word.
inline bool next_word(Word& w, int d) {
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i] < d) {
            ++w[i];
            return true;
        }
        w[i] = 1;
    }
    return false;
}

template <class F>
void for_each_word(std::size_t length, std::size_t d, F&& f) {
    Word w(length, 1);
    do {
        f(static_cast<const Word&>(w));
    } while (next_word(w, static_cast<int>(d)));
}

inline bool splits_with_offset(const Word& w, std::size_t k, const OffsetVector& xi) {
    std::vector<std::int64_t> diff(xi.dim(), 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        diff[static_cast<std::size_t>(w[i] - 1)] += i < k ? 1 : -1;
    for (std::size_t j = 0; j < xi.dim(); ++j)
        if (diff[j] != xi[j]) return false;
    return true;
}

} // namespace detail

/// Every string in W_{(n, xi)}, generated exhaustively. `limit` caps the listing.
inline std::vector<Word> list_offset_words(std::uint64_t n, const OffsetVector& xi,
                                           const OracleBudget& budget = {},
                                           std::size_t limit = std::numeric_limits<std::size_t>::max()) {
    const std::size_t d = xi.dim();
    const std::uint64_t L = 2 * n + xi.one_norm();
    detail::check_budget(d, L, detail::saturating_power(d, L), budget);
    const std::size_t k = static_cast<std::size_t>(n + xi.plus_norm());
    std::vector<Word> out;
    detail::for_each_word(static_cast<std::size_t>(L), d, [&](const Word& w) {
        if (out.size() < limit && detail::splits_with_offset(w, k, xi)) out.push_back(w);
    });
    return out;
}

/// |W_{(n, xi)}| by exhaustive generation of the d^(2n+|xi|_1) candidate strings.
inline BigCount oracle_count(std::uint64_t n, const OffsetVector& xi, const OracleBudget& budget = {}) {
    const std::size_t d = xi.dim();
    const std::uint64_t L = 2 * n + xi.one_norm();
    detail::check_budget(d, L, detail::saturating_power(d, L), budget);
    const std::size_t k = static_cast<std::size_t>(n + xi.plus_norm());
    std::uint64_t hits = 0;
    detail::for_each_word(static_cast<std::size_t>(L), d, [&](const Word& w) {
        if (detail::splits_with_offset(w, k, xi)) ++hits;
    });
    return BigCount(hits);
}

/// True iff |w| is even and both halves have the same multiset of letters.
inline bool is_abelian_square(std::span<const int> w) {
    if (w.size() % 2 != 0) return false;
    const std::size_t h = w.size() / 2;
    std::vector<int> a(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(h));
    std::vector<int> b(w.begin() + static_cast<std::ptrdiff_t>(h), w.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

namespace detail {

/// For each length a <= max_length: offset -> strings of length a carrying it.
using StringsByOffset = std::vector<std::map<OffsetVector, std::vector<Word>>>;
using CountsByOffset = std::vector<std::map<OffsetVector, std::uint64_t>>;

inline std::uint64_t strings_up_to(std::size_t d, std::uint64_t max_length) {
    std::uint64_t s = 0;
    for (std::uint64_t a = 0; a <= max_length; ++a) {
        const std::uint64_t p = saturating_power(d, a);
        if (p > std::numeric_limits<std::uint64_t>::max() - s) return std::numeric_limits<std::uint64_t>::max();
        s += p;
    }
    return s;
}

template <class Sink>
void classify_all_strings(std::size_t d, std::uint64_t max_length, Sink&& sink) {
    for (std::uint64_t a = 0; a <= max_length; ++a)
        for_each_word(static_cast<std::size_t>(a), d, [&](const Word& w) {
            for (const auto& label : classify_splits(w, d)) sink(a, label.offset, w);
        });
}

} // namespace detail

/// Number of elements of the disjoint union over xi of W_xi x W_xi whose
/// combined length |u| + |v| is total_length. A pair of strings is counted
/// once for every offset that both strings carry.
inline BigCount enumerate_pairs_by_length(std::size_t d, std::uint64_t total_length,
                                          const OracleBudget& budget = {}) {
    if (d == 0) throw std::invalid_argument("pair enumeration needs d >= 1");
    if (total_length % 2 != 0) throw std::invalid_argument("pair enumeration needs an even total length");
    detail::check_budget(d, total_length, detail::strings_up_to(d, total_length), budget);

    detail::CountsByOffset by_len(static_cast<std::size_t>(total_length) + 1);
    detail::classify_all_strings(d, total_length, [&](std::uint64_t a, const OffsetVector& xi, const Word&) {
        ++by_len[static_cast<std::size_t>(a)][xi];
    });
    BigCount acc = 0;
    for (std::uint64_t a = 0; a <= total_length; ++a) {
        const auto& left = by_len[static_cast<std::size_t>(a)];
        const auto& right = by_len[static_cast<std::size_t>(total_length - a)];
        for (const auto& [xi, cnt] : left) {
            auto it = right.find(xi);
            if (it != right.end()) acc += BigCount(cnt) * BigCount(it->second);
        }
    }
    return acc;
}

struct OffsetPair {
    Word first;
    Word second;
    OffsetVector offset;
};

/// The explicit pairs behind enumerate_pairs_by_length, ordered by |u|, then
/// offset, then the strings themselves.
inline std::vector<OffsetPair> pair_roster(std::size_t d, std::uint64_t total_length,
                                           const OracleBudget& budget = {}) {
    if (d == 0) throw std::invalid_argument("pair roster needs d >= 1");
    if (total_length % 2 != 0) throw std::invalid_argument("pair roster needs an even total length");
    detail::check_budget(d, total_length, detail::strings_up_to(d, total_length), budget);

    detail::StringsByOffset by_len(static_cast<std::size_t>(total_length) + 1);
    detail::classify_all_strings(d, total_length, [&](std::uint64_t a, const OffsetVector& xi, const Word& w) {
        by_len[static_cast<std::size_t>(a)][xi].push_back(w);
    });
    std::vector<OffsetPair> out;
    for (std::uint64_t a = 0; a <= total_length; ++a) {
        const auto& left = by_len[static_cast<std::size_t>(a)];
        const auto& right = by_len[static_cast<std::size_t>(total_length - a)];
        for (const auto& [xi, us] : left) {
            auto it = right.find(xi);
            if (it == right.end()) continue;
            for (const auto& u : us)
                for (const auto& v : it->second) out.push_back(OffsetPair{u, v, xi});
        }
    }
    return out;
}

} // namespace offsetwords

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "offsetwords/numbers.hpp"
#include "offsetwords/offset_vector.hpp"

namespace offsetwords {

/// Strings over [1:d] stored as letter sequences.
using Word = std::vector<int>;

/// Thread count for reductions. Results never depend on it.
struct Workers {
    unsigned count = 1;

    static Workers hardware() {
        const unsigned h = std::thread::hardware_concurrency();
        return Workers{h == 0 ? 1u : h};
    }
};

// ---------------------------------------------------------------------------
// Multinomials and weak compositions

/// |alpha|! / prod alpha_j!, built as prod_j C(alpha_1 + ... + alpha_j, alpha_j).
inline BigCount multinomial(std::span<const std::uint64_t> alpha) {
    BigCount r = 1;
    std::uint64_t partial = 0;
    for (auto a : alpha) {
        if (a == 0) continue;
        partial += a;
        if (partial != a) r *= binomial(partial, a);
    }
    return r;
}

inline BigCount multinomial(std::initializer_list<std::uint64_t> alpha) {
    return multinomial(std::span<const std::uint64_t>(alpha.begin(), alpha.size()));
}

/// Number of weak compositions of n into d parts, C(n+d-1, d-1).
inline BigCount composition_count(std::uint64_t n, std::size_t d) {
    if (d == 0) throw std::invalid_argument("compositions need d >= 1");
    return binomial(n + d - 1, d - 1);
}

/// Advances nu to its colexicographic successor among weak compositions with the
/// same sum. Returns false when nu was the last one, (0, ..., 0, n).
inline bool next_composition(std::span<std::uint64_t> nu) noexcept {
    const std::size_t d = nu.size();
    std::size_t i = 0;
    while (i < d && nu[i] == 0) ++i;
    if (i + 1 >= d) return false;
    const std::uint64_t v = nu[i];
    nu[i] = 0;
    nu[i + 1] += 1;
    nu[0] = v - 1;
    return true;
}

/// Forward range over all weak compositions of n into d parts, colexicographic:
/// (n,0,...,0) first and (0,...,0,n) last.
class WeakCompositions {
public:
    WeakCompositions(std::uint64_t n, std::size_t d) : n_(n), d_(d) {
        if (d == 0) throw std::invalid_argument("compositions need d >= 1");
    }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Counts;
        using difference_type = std::ptrdiff_t;
        using pointer = const Counts*;
        using reference = const Counts&;

        iterator() = default;
        iterator(std::uint64_t n, std::size_t d) : cur_(d, 0), done_(false) { cur_[0] = n; }

        reference operator*() const { return cur_; }
        pointer operator->() const { return &cur_; }
        iterator& operator++() {
            if (!next_composition(cur_)) done_ = true;
            return *this;
        }
        iterator operator++(int) {
            auto t = *this;
            ++*this;
            return t;
        }
        friend bool operator==(const iterator& a, const iterator& b) {
            if (a.done_ || b.done_) return a.done_ == b.done_;
            return a.cur_ == b.cur_;
        }

    private:
        Counts cur_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(n_, d_); }
    iterator end() const { return iterator(); }

private:
    std::uint64_t n_;
    std::size_t d_;
};

inline WeakCompositions weak_compositions(std::uint64_t n, std::size_t d) {
    return WeakCompositions(n, d);
}

/// Calls f(nu) for every weak composition of n into d parts whose colex index
/// is congruent to `stripe` modulo `stride`.
template <class F>
void for_each_composition(std::uint64_t n, std::size_t d, F&& f, std::size_t stripe = 0,
                          std::size_t stride = 1) {
    Counts nu(d, 0);
    nu[0] = n;
    std::size_t idx = 0;
    do {
        if (idx % stride == stripe) f(std::span<const std::uint64_t>(nu));
        ++idx;
    } while (next_composition(nu));
}

// ---------------------------------------------------------------------------
// Offset word counts

namespace detail {

inline BigCount offset_sum_stripe(std::uint64_t n, const SignSplit& s, std::size_t stripe,
                                  std::size_t stride) {
    const std::size_t d = s.plus.size();
    BigCount acc = 0;
    Counts a(d), b(d);
    for_each_composition(
        n, d,
        [&](std::span<const std::uint64_t> nu) {
            for (std::size_t j = 0; j < d; ++j) {
                a[j] = nu[j] + s.plus[j];
                b[j] = nu[j] + s.minus[j];
            }
            acc += multinomial(a) * multinomial(b);
        },
        stripe, stride);
    return acc;
}

} // namespace detail

/// w_{(n, xi)}: the number of n-th order words offset by xi, summed over the
/// weak compositions nu of n as multinomial(nu + xi^+) * multinomial(nu + xi^-).
inline BigCount count_offset_words(std::uint64_t n, const OffsetVector& xi,
                                   Workers workers = Workers{}) {
    const SignSplit s = sign_split(xi);
    const std::size_t stride = std::max(1u, workers.count);
    if (stride == 1) return detail::offset_sum_stripe(n, s, 0, 1);

    std::vector<BigCount> partial(stride);
    {
        std::vector<std::jthread> pool;
        pool.reserve(stride);
        for (std::size_t t = 0; t < stride; ++t)
            pool.emplace_back([&, t] { partial[t] = detail::offset_sum_stripe(n, s, t, stride); });
    }
    BigCount acc = 0;
    for (const auto& p : partial) acc += p;
    return acc;
}

// ---------------------------------------------------------------------------
// Strings, Parikh vectors, split labels

inline ParikhVector parikh(std::span<const int> w, std::size_t d) {
    ParikhVector p{Counts(d, 0)};
    for (int c : w) {
        if (c < 1 || static_cast<std::size_t>(c) > d)
            throw std::invalid_argument("letter " + std::to_string(c) + " outside [1:" +
                                        std::to_string(d) + "]");
        ++p.counts[static_cast<std::size_t>(c - 1)];
    }
    return p;
}

/// Component-wise minimum of two Parikh vectors.
inline ParikhVector mutuality(const ParikhVector& p, const ParikhVector& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("mutuality: dimension mismatch");
    ParikhVector m{Counts(p.dim())};
    for (std::size_t j = 0; j < p.dim(); ++j) m.counts[j] = std::min(p.counts[j], q.counts[j]);
    return m;
}

/// The |w|+1 labels of w, one per split point k = 0..|w|, in order of k.
inline std::vector<SplitLabel> classify_splits(std::span<const int> w, std::size_t d) {
    if (d == 0) throw std::invalid_argument("classify_splits needs d >= 1");
    ParikhVector prefix{Counts(d, 0)};
    ParikhVector suffix = parikh(w, d);
    std::vector<SplitLabel> labels;
    labels.reserve(w.size() + 1);
    for (std::size_t k = 0;; ++k) {
        OffsetVector xi = difference(prefix, suffix);
        const std::uint64_t norm = xi.one_norm();
        // |w| - |xi|_1 is always even
        labels.push_back(SplitLabel{(w.size() - norm) / 2, std::move(xi)});
        if (k == w.size()) break;
        const auto c = static_cast<std::size_t>(w[k] - 1);
        ++prefix.counts[c];
        --suffix.counts[c];
    }
    return labels;
}

/// Parses a string of digit letters such as "1312" into a Word over [1:d].
inline Word parse_word(std::string_view text, std::size_t d) {
    Word w;
    w.reserve(text.size());
    for (char ch : text) {
        if (ch < '1' || ch > '9' || static_cast<std::size_t>(ch - '0') > d)
            throw std::invalid_argument(std::string("invalid letter '") + ch + "'");
        w.push_back(ch - '0');
    }
    return w;
}

/// Digits for alphabets up to 9 letters, dot-separated letters beyond. "e" is the empty word.
inline std::string format_word(std::span<const int> w) {
    if (w.empty()) return "e";
    const bool wide = std::any_of(w.begin(), w.end(), [](int c) { return c > 9; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (wide && i) s += '.';
        s += std::to_string(w[i]);
    }
    return s;
}

} // namespace offsetwords

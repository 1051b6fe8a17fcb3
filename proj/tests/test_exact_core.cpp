#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "offsetwords/exact_core.hpp"
#include "oracles.hpp"

using namespace offsetwords;

TEST(SignSplit, SeparatesPositiveAndNegativeParts) {
    const auto s = sign_split(OffsetVector{3, -2, 0});
    EXPECT_EQ(s.plus, (Counts{3, 0, 0}));
    EXPECT_EQ(s.minus, (Counts{0, 2, 0}));
    const auto z = sign_split(OffsetVector{0, 0});
    EXPECT_EQ(z.plus, (Counts{0, 0}));
    EXPECT_EQ(z.minus, (Counts{0, 0}));
    const auto neg = sign_split(OffsetVector{-5});
    EXPECT_EQ(neg.plus, (Counts{0}));
    EXPECT_EQ(neg.minus, (Counts{5}));
}

TEST(OffsetVector, NormsAndRejection) {
    const OffsetVector xi{3, -2, 0, 1};
    EXPECT_EQ(xi.one_norm(), 6u);
    EXPECT_EQ(xi.plus_norm() + xi.minus_norm(), xi.one_norm());
    EXPECT_EQ(xi.dim(), 4u);
    EXPECT_THROW(OffsetVector(std::vector<std::int64_t>{}), std::invalid_argument);
    EXPECT_EQ(xi.str(), "(3,-2,0,1)");
}

TEST(Multinomial, SmallValues) {
    EXPECT_EQ(multinomial({2, 1}), 3);
    EXPECT_EQ(multinomial({0, 0, 0}), 1);
    EXPECT_EQ(multinomial({1, 1, 1}), 6);
    EXPECT_EQ(multinomial({}), 1);
}

TEST(Multinomial, MatchesFactorialQuotient) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Counts a(1 + rng() % 5);
        for (auto& v : a) v = rng() % 12;
        oracle::Int denom = 1;
        for (auto v : a) denom *= oracle::factorial(static_cast<unsigned>(v));
        const auto expect = oracle::factorial(static_cast<unsigned>(total(a))) / denom;
        EXPECT_EQ(multinomial(a), BigCount(expect.str()));
    }
}

TEST(WeakCompositions, CountAndOrder) {
    std::vector<Counts> seen(weak_compositions(2, 3).begin(), weak_compositions(2, 3).end());
    ASSERT_EQ(seen.size(), 6u);
    const std::vector<Counts> expect{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
    EXPECT_EQ(seen, expect);
    for (std::size_t i = 1; i < seen.size(); ++i)
        EXPECT_TRUE(std::lexicographical_compare(seen[i - 1].rbegin(), seen[i - 1].rend(), seen[i].rbegin(),
                                                 seen[i].rend()));
}

TEST(WeakCompositions, EdgeCases) {
    std::vector<Counts> zero(weak_compositions(0, 4).begin(), weak_compositions(0, 4).end());
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_EQ(zero[0], Counts(4, 0));
    std::vector<Counts> one(weak_compositions(3, 1).begin(), weak_compositions(3, 1).end());
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], Counts{3});
    EXPECT_THROW(weak_compositions(2, 0), std::invalid_argument);
}

TEST(WeakCompositions, StreamLengthIsBinomial) {
    for (std::uint64_t n = 0; n <= 7; ++n)
        for (std::size_t d = 1; d <= 5; ++d) {
            std::set<Counts> distinct;
            std::size_t count = 0;
            for (const auto& nu : weak_compositions(n, d)) {
                EXPECT_EQ(total(nu), n);
                distinct.insert(nu);
                ++count;
            }
            EXPECT_EQ(count, distinct.size());
            EXPECT_EQ(BigCount(count), composition_count(n, d));
        }
}

TEST(CountOffsetWords, KnownValues) {
    EXPECT_EQ(count_offset_words(2, OffsetVector{0, 0, 0}), 15);
    EXPECT_EQ(count_offset_words(0, OffsetVector{2, -1}), 1);
    EXPECT_EQ(count_offset_words(1, OffsetVector{1, 0}), 3);
    EXPECT_EQ(count_offset_words(6, OffsetVector{0, 0, 0}), 35169);
}

TEST(CountOffsetWords, AbelianSquaresOverThreeLetters) {
    const std::vector<int> a002893{1, 3, 15, 93, 639, 4653, 35169, 272835, 2157759};
    for (std::size_t n = 0; n < a002893.size(); ++n)
        EXPECT_EQ(count_offset_words(n, OffsetVector::zero(3)), a002893[n]) << "n=" << n;
}

TEST(CountOffsetWords, MatchesIndependentBruteForce) {
    const std::vector<std::vector<long>> cases{{0, 0}, {1, 0}, {1, -1}, {2, 1}, {0, 0, 0}, {1, -1, 0}, {1, 1, 1}, {-2}};
    for (const auto& c : cases)
        for (unsigned n = 0; n <= 3; ++n) {
            OffsetVector xi(std::vector<std::int64_t>(c.begin(), c.end()));
            if (std::pow(c.size(), 2 * n + xi.one_norm()) > 2e6) continue;
            EXPECT_EQ(count_offset_words(n, xi), BigCount(oracle::brute_offset_words(n, c))) << xi << " n=" << n;
        }
}

TEST(CountOffsetWords, PermutationAndNegationSymmetry) {
    std::vector<std::int64_t> base{2, -1, 0, 1};
    std::sort(base.begin(), base.end());
    for (std::uint64_t n = 0; n <= 4; ++n) {
        const BigCount ref = count_offset_words(n, OffsetVector(base));
        auto perm = base;
        do {
            const OffsetVector xi(perm);
            EXPECT_EQ(count_offset_words(n, xi), ref);
            EXPECT_EQ(count_offset_words(n, -xi), ref);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST(CountOffsetWords, OrderZeroIsProductOfMultinomials) {
    const OffsetVector xi{3, -2, 1, -1};
    const auto s = sign_split(xi);
    EXPECT_EQ(count_offset_words(0, xi), multinomial(s.plus) * multinomial(s.minus));
}

TEST(CountOffsetWords, SingleLetterAlphabetAlwaysOne) {
    for (std::int64_t m = -4; m <= 4; ++m)
        for (std::uint64_t n = 0; n <= 20; ++n) EXPECT_EQ(count_offset_words(n, OffsetVector{m}), 1);
}

TEST(CountOffsetWords, IndependentOfWorkerCount) {
    const OffsetVector xi{1, -2, 0, 3};
    const BigCount ref = count_offset_words(12, xi, Workers{1});
    for (unsigned w : {2u, 3u, 5u, 8u}) EXPECT_EQ(count_offset_words(12, xi, Workers{w}), ref);
}

TEST(Mutuality, ComponentwiseMinimum) {
    EXPECT_EQ(mutuality(ParikhVector{{2, 0}}, ParikhVector{{1, 1}}).counts, (Counts{1, 0}));
    EXPECT_EQ(mutuality(ParikhVector{{0, 0}}, ParikhVector{{3, 5}}).counts, (Counts{0, 0}));
    const ParikhVector p{{4, 1, 7}};
    EXPECT_EQ(mutuality(p, p), p);
    EXPECT_THROW(mutuality(ParikhVector{{1}}, ParikhVector{{1, 2}}), std::invalid_argument);
}

TEST(Mutuality, SignSplitIdentity) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t d = 1 + rng() % 6;
        ParikhVector p{Counts(d)}, q{Counts(d)};
        for (std::size_t j = 0; j < d; ++j) {
            p.counts[j] = rng() % 9;
            q.counts[j] = rng() % 9;
        }
        const auto m = mutuality(p, q);
        const auto s = sign_split(difference(p, q));
        for (std::size_t j = 0; j < d; ++j) {
            EXPECT_EQ(m.counts[j] + s.plus[j], p.counts[j]);
            EXPECT_EQ(m.counts[j] + s.minus[j], q.counts[j]);
        }
    }
}

TEST(ClassifySplits, WorkedExample) {
    const auto labels = classify_splits(parse_word("1312", 3), 3);
    ASSERT_EQ(labels.size(), 5u);
    EXPECT_EQ(labels[2].order, 1u);
    EXPECT_EQ(labels[2].offset, (OffsetVector{0, -1, 1}));
    for (const auto& l : labels) EXPECT_EQ(l.string_length(), 4u);
}

TEST(ClassifySplits, EmptyAndRepeatedLetter) {
    const auto e = classify_splits(Word{}, 3);
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0].order, 0u);
    EXPECT_EQ(e[0].offset, OffsetVector::zero(3));

    const auto l = classify_splits(parse_word("11", 2), 2);
    ASSERT_EQ(l.size(), 3u);
    EXPECT_EQ(l[0], (SplitLabel{0, OffsetVector{-2, 0}}));
    EXPECT_EQ(l[1], (SplitLabel{1, OffsetVector{0, 0}}));
    EXPECT_EQ(l[2], (SplitLabel{0, OffsetVector{2, 0}}));
}

TEST(ClassifySplits, InvalidLetters) {
    EXPECT_THROW(classify_splits(Word{1, 4}, 3), std::invalid_argument);
    EXPECT_THROW(classify_splits(Word{0}, 3), std::invalid_argument);
    EXPECT_THROW(parse_word("14", 3), std::invalid_argument);
    EXPECT_THROW(parse_word("1a", 3), std::invalid_argument);
}

TEST(ClassifySplits, OrdersAlwaysIntegral) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = 1 + rng() % 4;
        Word w(rng() % 12);
        for (auto& c : w) c = 1 + static_cast<int>(rng() % d);
        const auto labels = classify_splits(w, d);
        ASSERT_EQ(labels.size(), w.size() + 1);
        for (const auto& l : labels) {
            EXPECT_EQ((w.size() - l.offset.one_norm()) % 2, 0u);
            EXPECT_EQ(l.string_length(), w.size());
        }
    }
}

TEST(FormatWord, Forms) {
    EXPECT_EQ(format_word(Word{}), "e");
    EXPECT_EQ(format_word(Word{1, 3, 1, 2}), "1312");
    EXPECT_EQ(format_word(Word{1, 12}), "1.12");
}

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "offsetwords/errors.hpp"
#include "offsetwords/exact_core.hpp"
#include "offsetwords/string_oracle.hpp"
#include "oracles.hpp"

using namespace offsetwords;

TEST(OracleCount, SmallCases) {
    EXPECT_EQ(oracle_count(1, OffsetVector{1, 0}), 3);
    for (std::size_t d = 1; d <= 4; ++d) EXPECT_EQ(oracle_count(0, OffsetVector::zero(d)), 1);
    EXPECT_EQ(oracle_count(2, OffsetVector{0, 0}), 6);
}

TEST(OracleCount, ListsTheStrings) {
    const auto words = list_offset_words(1, OffsetVector{1, 0});
    std::vector<std::string> text;
    for (const auto& w : words) text.push_back(format_word(w));
    EXPECT_EQ(text, (std::vector<std::string>{"111", "122", "212"}));
    EXPECT_EQ(list_offset_words(2, OffsetVector{0, 0}, {}, 4).size(), 4u);
}

TEST(OracleCount, RefusesOverBudget) {
    OracleBudget tight;
    tight.max_strings = 1000;
    EXPECT_THROW(oracle_count(5, OffsetVector{0, 0}, tight), BudgetExceeded);
    OracleBudget short_len;
    short_len.max_total_length = 3;
    EXPECT_THROW(oracle_count(2, OffsetVector{0}, short_len), BudgetExceeded);
    OracleBudget small_alpha;
    small_alpha.max_alphabet = 2;
    EXPECT_THROW(oracle_count(0, OffsetVector::zero(3), small_alpha), BudgetExceeded);
}

TEST(OracleCount, AgreesWithFormulaAndIndependentScan) {
    for (std::size_t d = 1; d <= 3; ++d)
        for (std::int64_t a = -3; a <= 3; ++a)
            for (std::int64_t b = -3; b <= 3; ++b)
                for (std::int64_t c = -3; c <= 3; ++c) {
                    std::vector<std::int64_t> v{a, b, c};
                    v.resize(d);
                    if ((d < 2 && b) || (d < 3 && c)) continue;
                    const OffsetVector xi(v);
                    if (xi.one_norm() > 3) continue;
                    for (std::uint64_t n = 0; n <= 4; ++n) {
                        const BigCount o = oracle_count(n, xi);
                        EXPECT_EQ(o, count_offset_words(n, xi)) << xi << " n=" << n;
                        if (n <= 2) {
                            EXPECT_EQ(o, BigCount(oracle::brute_offset_words(
                                             static_cast<unsigned>(n), std::vector<long>(v.begin(), v.end()))));
                        }
                    }
                }
}

TEST(OracleCount, EveryStringCarriesLengthPlusOneLabels) {
    for (std::size_t d = 1; d <= 3; ++d)
        for (std::uint64_t L = 0; L <= 6; ++L) {
            BigCount sum = 0;
            std::vector<std::int64_t> v(d, 0);
            // all xi with |xi|_1 <= L and matching parity
            std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t j, std::int64_t left) {
                if (j == d) {
                    const OffsetVector xi(v);
                    if ((L - xi.one_norm()) % 2 == 0) sum += oracle_count((L - xi.one_norm()) / 2, xi);
                    return;
                }
                for (std::int64_t x = -left; x <= left; ++x) {
                    v[j] = x;
                    rec(j + 1, left - (x < 0 ? -x : x));
                }
            };
            rec(0, static_cast<std::int64_t>(L));
            BigCount expect = L + 1;
            for (std::uint64_t i = 0; i < L; ++i) expect *= d;
            EXPECT_EQ(sum, expect) << "d=" << d << " L=" << L;
        }
}

TEST(IsAbelianSquare, Examples) {
    EXPECT_TRUE(is_abelian_square(parse_word("1212", 2)));
    EXPECT_FALSE(is_abelian_square(parse_word("1312", 3)));
    EXPECT_TRUE(is_abelian_square(Word{}));
    EXPECT_FALSE(is_abelian_square(parse_word("121", 2)));
    EXPECT_TRUE(is_abelian_square(parse_word("123321", 3)));
}

TEST(IsAbelianSquare, MatchesMiddleSplitLabel) {
    for (std::size_t L = 0; L <= 6; ++L) {
        Word w(L, 1);
        do {
            const auto labels = classify_splits(w, 3);
            const bool middle_zero = L % 2 == 0 && labels[L / 2].offset.is_zero();
            EXPECT_EQ(is_abelian_square(w), middle_zero) << format_word(w);
        } while (detail::next_word(w, 3));
    }
}

TEST(PairsByLength, TableOneRows) {
    EXPECT_EQ(enumerate_pairs_by_length(2, 0), 1);
    EXPECT_EQ(enumerate_pairs_by_length(2, 2), 8);
    EXPECT_EQ(enumerate_pairs_by_length(2, 4), 54);
    EXPECT_THROW(enumerate_pairs_by_length(2, 3), std::invalid_argument);
}

TEST(PairsByLength, ThreeLettersLengthTwo) {
    EXPECT_EQ(enumerate_pairs_by_length(3, 2), 12);
}

TEST(PairsByLength, RosterMatchesCount) {
    for (std::uint64_t L : {0u, 2u, 4u}) {
        const auto roster = pair_roster(2, L);
        EXPECT_EQ(BigCount(roster.size()), enumerate_pairs_by_length(2, L));
        for (const auto& p : roster) {
            EXPECT_EQ(p.first.size() + p.second.size(), L);
            const auto lu = classify_splits(p.first, 2);
            const auto lv = classify_splits(p.second, 2);
            auto has = [&](const std::vector<SplitLabel>& ls) {
                return std::any_of(ls.begin(), ls.end(), [&](const SplitLabel& l) { return l.offset == p.offset; });
            };
            EXPECT_TRUE(has(lu) && has(lv));
        }
    }
}

// Copyright 2026 The susbounds Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "susbounds/oracle.hpp"
#include "susbounds/sus_query.hpp"

using sus::Interval;
using Intervals = std::vector<Interval>;

namespace {

const sus::MusList& worked_mus() {
    static const auto mus = sus::compute_mus(sus::make_text("aabbaababaa"));
    return mus;
}

void expect_matches_oracle(const std::string& s) {
    const auto t = sus::make_text(s);
    const auto mus = sus::compute_mus(t);
    const sus::oracle::NaiveSus naive(t);
    for (std::size_t i = 1; i <= t.size(); ++i) {
        for (std::size_t j = i; j <= t.size(); ++j) {
            const Interval q{i, j};
            const auto fast = sus::interval_sus(mus, q);
            const auto expect = naive.interval_sus(q);
            ASSERT_EQ(fast.sus, expect) << s << " " << q;
            ASSERT_EQ(sus::interval_sus_scan(mus, q).sus, expect) << s << " " << q;
            for (const auto& a : fast.sus) {
                ASSERT_EQ(a.length(), fast.length);
                ASSERT_TRUE(sus::contains(a, q));
            }
        }
    }
}

} // namespace

TEST(SusQueryTest, Cover) {
    EXPECT_EQ(sus::cover({3, 4}, {6, 6}), (Interval{3, 6}));
    EXPECT_EQ(sus::cover({8, 11}, {6, 6}), (Interval{6, 11}));
    EXPECT_EQ(sus::cover({4, 7}, {5, 5}), (Interval{4, 7}));
}

TEST(SusQueryTest, PointQueriesOnWorkedString) {
    const auto six = sus::point_sus(worked_mus(), 6);
    EXPECT_EQ(six.sus, (Intervals{{3, 6}, {4, 7}, {5, 8}, {6, 9}}));
    EXPECT_EQ(six.length, 4u);
    EXPECT_EQ(six.query, (Interval{6, 6}));
    EXPECT_EQ(sus::point_sus(worked_mus(), 1).sus, (Intervals{{1, 4}}));
    EXPECT_EQ(sus::point_sus(worked_mus(), 10).sus, (Intervals{{7, 10}, {8, 11}}));
}

TEST(SusQueryTest, SingleSymbol) {
    const auto mus = sus::compute_mus(sus::make_text("a"));
    const auto a = sus::point_sus(mus, 1);
    EXPECT_EQ(a.sus, (Intervals{{1, 1}}));
    EXPECT_EQ(a.length, 1u);
}

TEST(SusQueryTest, IntervalQueries) {
    EXPECT_EQ(sus::interval_sus(worked_mus(), {5, 8}).sus, (Intervals{{5, 8}}));
    EXPECT_EQ(sus::interval_sus(worked_mus(), {2, 3}).sus, (Intervals{{2, 4}}));
    EXPECT_EQ(sus::interval_sus(worked_mus(), {6, 6}).sus, sus::point_sus(worked_mus(), 6).sus);

    const auto mus = sus::compute_mus(sus::make_text("baacaad"));
    EXPECT_EQ(sus::interval_sus(mus, {2, 2}).sus, (Intervals{{1, 2}}));
}

TEST(SusQueryTest, UniqueQueryAnswersItself) {
    // [1,5] holds "bb" strictly inside; [3,4] is itself a MUS
    EXPECT_EQ(sus::interval_sus(worked_mus(), {1, 5}).sus, (Intervals{{1, 5}}));
    EXPECT_EQ(sus::interval_sus(worked_mus(), {3, 4}).sus, (Intervals{{3, 4}}));
    EXPECT_EQ(sus::interval_sus(worked_mus(), {3, 6}).sus, (Intervals{{3, 6}}));
}

TEST(SusQueryTest, OutOfRange) {
    try {
        (void)sus::point_sus(worked_mus(), 12);
        FAIL();
    } catch (const sus::error& e) {
        EXPECT_EQ(e.code(), sus::errc::position_out_of_range);
    }
    EXPECT_THROW((void)sus::point_sus(worked_mus(), 0), sus::error);
    try {
        (void)sus::interval_sus(worked_mus(), {4, 12});
        FAIL();
    } catch (const sus::error& e) {
        EXPECT_EQ(e.code(), sus::errc::interval_out_of_range);
    }
    EXPECT_THROW((void)sus::interval_sus(worked_mus(), {5, 4}), sus::error);
}

TEST(SusQueryTest, MatchesOracleExhaustive) {
    for (std::size_t n = 1; n <= 9; ++n) {
        for (const auto& s : sus::oracle::canonical_strings(n, 3)) {
            expect_matches_oracle(s);
        }
    }
}

TEST(SusQueryTest, MatchesOracleRandom) {
    std::mt19937_64 rng(99);
    for (const std::size_t sigma : {2u, 3u, 4u, 26u}) {
        for (int trial = 0; trial < 25; ++trial) {
            expect_matches_oracle(sus::oracle::random_string(rng, 80, sigma));
        }
    }
}

// Each answer is unique and every shorter interval around q repeats.
TEST(SusQueryTest, AnswersAreShortestUnique) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const auto t = sus::make_text(sus::oracle::random_string(rng, 14, 2 + trial % 3));
        const auto mus = sus::compute_mus(t);
        for (std::size_t s = 1; s <= t.size(); ++s) {
            for (std::size_t e = s; e <= t.size(); ++e) {
                const auto a = sus::interval_sus(mus, {s, e});
                ASSERT_FALSE(a.sus.empty());
                for (const auto& iv : a.sus) {
                    ASSERT_TRUE(sus::oracle::naive_unique(t, iv));
                }
                for (std::size_t i = 1; i <= s; ++i) {
                    for (std::size_t j = e; j <= t.size(); ++j) {
                        if (j - i + 1 < a.length) {
                            ASSERT_FALSE(sus::oracle::naive_unique(t, {i, j}));
                        }
                    }
                }
            }
        }
    }
}

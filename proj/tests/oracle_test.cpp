// Copyright 2026 The susbounds Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <vector>

#include "susbounds/oracle.hpp"

using sus::Interval;
using Intervals = std::vector<Interval>;
namespace oracle = sus::oracle;

TEST(OracleTest, NaiveUnique) {
    const auto t = sus::make_text("aabbaababaa");
    EXPECT_TRUE(oracle::naive_unique(t, {3, 4}));
    EXPECT_FALSE(oracle::naive_unique(t, {1, 2}));
    EXPECT_TRUE(oracle::naive_unique(t, {1, 11}));
}

TEST(OracleTest, TableAgreesWithScan) {
    for (std::size_t n = 1; n <= 9; ++n) {
        for (const auto& s : oracle::canonical_strings(n, 3)) {
            const auto t = sus::make_text(s);
            const oracle::UniquenessTable table(t);
            for (std::size_t i = 1; i <= n; ++i) {
                for (std::size_t j = i; j <= n; ++j) {
                    ASSERT_EQ(table.unique({i, j}), oracle::naive_unique(t, {i, j})) << s;
                }
            }
        }
    }
}

TEST(OracleTest, NaiveMus) {
    EXPECT_EQ(oracle::naive_mus(sus::make_text("aabbaababaa")),
              (Intervals{{3, 4}, {4, 7}, {5, 8}, {7, 9}, {8, 11}}));
    EXPECT_EQ(oracle::naive_mus(sus::make_text("aaa")), (Intervals{{1, 3}}));
    EXPECT_EQ(oracle::naive_mus(sus::make_text("ab")), (Intervals{{1, 1}, {2, 2}}));
}

TEST(OracleTest, NaivePointSus) {
    const auto t = sus::make_text("aabbaababaa");
    EXPECT_EQ(oracle::naive_point_sus(t, 6), (Intervals{{3, 6}, {4, 7}, {5, 8}, {6, 9}}));
    // f^-1(10) = {[7,10]}, but [8,11] is an equally short SUS for 10 as well
    EXPECT_EQ(oracle::naive_point_sus(t, 10), (Intervals{{7, 10}, {8, 11}}));
    EXPECT_EQ(oracle::naive_point_sus(sus::make_text("a"), 1), (Intervals{{1, 1}}));
    EXPECT_THROW(oracle::naive_point_sus(t, 12), sus::error);
}

TEST(OracleTest, NaiveIntervalSus) {
    const auto t = sus::make_text("aabbaababaa");
    EXPECT_EQ(oracle::naive_interval_sus(t, {5, 8}), (Intervals{{5, 8}}));
    EXPECT_EQ(oracle::naive_interval_sus(sus::make_text("baacaad"), {2, 2}), (Intervals{{1, 2}}));
    EXPECT_EQ(oracle::naive_interval_sus(t, {6, 6}), oracle::naive_point_sus(t, 6));
}

TEST(OracleTest, NaiveSets) {
    EXPECT_EQ(oracle::naive_ps_set(sus::make_text("axbxc")).size(), 7u);
    EXPECT_EQ(oracle::naive_is_set(sus::make_text("baacaad")).size(), 11u);
    EXPECT_EQ(oracle::naive_ps_set(sus::make_text("a")), (Intervals{{1, 1}}));
    EXPECT_EQ(oracle::naive_is_set(sus::make_text("a")), (Intervals{{1, 1}}));
}

TEST(OracleTest, CanonicalStrings) {
    EXPECT_EQ(oracle::canonical_strings(3, 2), (std::vector<std::string>{"aaa", "aab", "aba", "abb"}));
    for (std::size_t n = 1; n <= 10; ++n) {
        for (std::size_t sigma = 1; sigma <= 4; ++sigma) {
            EXPECT_EQ(oracle::canonical_strings(n, sigma).size(), oracle::canonical_count(n, sigma));
        }
    }
    EXPECT_EQ(oracle::canonical_count(12, 3), 88574u);
    EXPECT_EQ(oracle::canonical_count(14, 2), 8192u);
}

TEST(OracleTest, SweepSmall) {
    oracle::SweepOptions opts;
    opts.jobs = 2;
    const auto five = oracle::sweep(5, 3, opts);
    ASSERT_EQ(five.size(), 5u);
    EXPECT_EQ(five[4].n, 5u);
    EXPECT_EQ(five[4].strings, 41u);
    // 4 symbols would be needed for a_1 x a_2 x a_3; with 3 the maximum 7 is
    // still reached, e.g. by "abbbc"
    EXPECT_EQ(five[4].max_ps, 7u);
    bool found = false;
    for (const auto& w : five[4].ps_witnesses) {
        found = found || w.text == "abbbc";
        EXPECT_LE(w.ps, std::min(2 * 5 - w.m, 5 + w.m - 1));
    }
    EXPECT_TRUE(found);
    for (const auto& r : five) {
        EXPECT_TRUE(r.violations.empty());
        EXPECT_TRUE(r.mismatches.empty());
        EXPECT_LE(2 * r.max_ps, 3 * r.n - 1);
    }

    const auto four = oracle::sweep(4, 2, opts);
    EXPECT_GE(four[3].max_ps, 4u);
    EXPECT_EQ(four[3].max_ps, 4u);

    const auto one = oracle::sweep(1, 2, opts);
    EXPECT_EQ(one[0].max_ps, 1u);
    EXPECT_EQ(one[0].max_is, 1u);
}

TEST(OracleTest, SweepWithFourSymbolsFindsTightString) {
    const auto r = oracle::sweep(5, 4);
    EXPECT_EQ(r[4].max_ps, 7u);
    bool found = false;
    for (const auto& w : r[4].ps_witnesses) {
        found = found || w.text == "abcbd"; // canonical "axbxc"
    }
    EXPECT_TRUE(found);
}

TEST(OracleTest, SweepBudget) {
    oracle::SweepOptions opts;
    opts.budget = 100;
    try {
        oracle::sweep(8, 3, opts);
        FAIL();
    } catch (const sus::error& e) {
        EXPECT_EQ(e.code(), sus::errc::budget_exceeded);
    }
}

TEST(OracleTest, SweepIsDeterministicAcrossJobCounts) {
    oracle::SweepOptions one;
    oracle::SweepOptions four;
    four.jobs = 4;
    const auto a = oracle::sweep(7, 3, one);
    const auto b = oracle::sweep(7, 3, four);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].max_ps, b[i].max_ps);
        EXPECT_EQ(a[i].max_is, b[i].max_is);
        ASSERT_EQ(a[i].ps_witnesses.size(), b[i].ps_witnesses.size());
        for (std::size_t k = 0; k < a[i].ps_witnesses.size(); ++k) {
            EXPECT_EQ(a[i].ps_witnesses[k].text, b[i].ps_witnesses[k].text);
        }
    }
}

TEST(OracleTest, CompareDetectsBrokenFastPath) {
    const auto t = sus::make_text("aabbaababaa");
    auto a = sus::analyze(t);
    EXPECT_TRUE(oracle::compare_with_oracle(t, a).empty());
    a.mus = sus::MusList({{3, 4}, {4, 7}, {7, 9}, {8, 11}}, 11);
    EXPECT_FALSE(oracle::compare_with_oracle(t, a).empty());
}

TEST(OracleTest, RandomRunIsSeeded) {
    const auto a = oracle::random_run(40, 60, {2, 3, 4, 26}, 42);
    EXPECT_EQ(a.strings, 40u);
    EXPECT_TRUE(a.violations.empty());
    EXPECT_TRUE(a.mismatches.empty());
    std::mt19937_64 r1(42), r2(42);
    EXPECT_EQ(oracle::random_string(r1, 50, 3), oracle::random_string(r2, 50, 3));
}

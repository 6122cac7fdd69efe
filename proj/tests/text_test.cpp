// Copyright 2026 The susbounds Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "susbounds/text.hpp"

using sus::Interval;

TEST(TextTest, MakeTextKeepsLength) {
    EXPECT_EQ(sus::make_text("aabbaababaa").size(), 11u);
    EXPECT_EQ(sus::make_text("a").size(), 1u);
}

TEST(TextTest, EmptyTextRejected) {
    try {
        sus::make_text("");
        FAIL() << "expected EmptyText";
    } catch (const sus::error& e) {
        EXPECT_EQ(e.code(), sus::errc::empty_text);
    }
}

TEST(TextTest, BytesAreOpaque) {
    const std::string raw("\0\xff\n\t", 4);
    const auto t = sus::make_text(raw);
    EXPECT_EQ(t.size(), 4u);
    EXPECT_EQ(t[1], 0u);
    EXPECT_EQ(t[2], 0xffu);
}

TEST(TextTest, Substring) {
    const auto t = sus::make_text("aabbaababaa");
    EXPECT_EQ(sus::substring(t, {3, 4}), "bb");
    EXPECT_EQ(sus::substring(t, {5, 8}), "aaba");
    EXPECT_EQ(sus::substring(t, {7, 7}), "b");
    EXPECT_EQ(sus::substring(t, {1, 11}), "aabbaababaa");
}

TEST(TextTest, SubstringOutOfBounds) {
    const auto t = sus::make_text("abc");
    for (const Interval iv : {Interval{1, 4}, Interval{0, 1}, Interval{3, 2}}) {
        try {
            (void)sus::substring(t, iv);
            FAIL() << iv;
        } catch (const sus::error& e) {
            EXPECT_EQ(e.code(), sus::errc::out_of_bounds);
        }
    }
}

TEST(TextTest, Contains) {
    EXPECT_TRUE(sus::contains({3, 6}, {6, 6}));
    EXPECT_FALSE(sus::contains({4, 7}, {3, 6}));
    EXPECT_TRUE(sus::contains({5, 8}, {5, 8}));
}

TEST(TextTest, ContainsIsReflexiveAndTransitive) {
    const std::size_t n = 7;
    std::vector<Interval> all;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            all.push_back({i, j});
        }
    }
    for (const auto& a : all) {
        EXPECT_TRUE(sus::contains(a, a));
        for (const auto& b : all) {
            for (const auto& c : all) {
                if (sus::contains(a, b) && sus::contains(b, c)) {
                    EXPECT_TRUE(sus::contains(a, c)) << a << b << c;
                }
            }
        }
    }
}

TEST(TextTest, WholeSubstringRoundTrip) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::string s(1 + rng() % 40, 'a');
        for (char& c : s) {
            c = static_cast<char>(rng() % 256);
        }
        const auto t = sus::make_text(s);
        EXPECT_EQ(sus::substring(t, {1, t.size()}), s);
    }
}

TEST(TextTest, FileInputStripsOneTrailingNewline) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = dir / "susbounds_text_test.txt";
    {
        std::ofstream out(path, std::ios::binary);
        out << "abc\n\n";
    }
    EXPECT_EQ(sus::read_text_file(path.string()).view(), "abc\n");
    {
        std::ofstream out(path, std::ios::binary);
        out << "abc";
    }
    EXPECT_EQ(sus::read_text_file(path.string()).view(), "abc");
    {
        std::ofstream out(path, std::ios::binary);
        out << "\n";
    }
    EXPECT_THROW(sus::read_text_file(path.string()), sus::error);
    std::filesystem::remove(path);
}

TEST(TextTest, MissingFileIsIoError) {
    try {
        sus::read_text_file("/nonexistent/definitely/missing.txt");
        FAIL();
    } catch (const sus::error& e) {
        EXPECT_EQ(e.code(), sus::errc::io_error);
    }
}

// Copyright 2026 The susbounds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "text.hpp"

namespace sus {

namespace detail {

using index_t = std::uint32_t;

/// Prefix doubling with radix passes; O(n log n) worst case.
/// Returns 0-based start positions in lexicographic suffix order.
inline std::vector<index_t> build_suffix_array(std::string_view s) {
    const std::size_t n = s.size();
    std::vector<index_t> sa(n), rank(n), tmp(n);
    std::vector<index_t> count(std::max<std::size_t>(256, n) + 1, 0);

    for (std::size_t i = 0; i < n; ++i) {
        ++count[static_cast<unsigned char>(s[i])];
    }
    for (std::size_t c = 1; c < 256; ++c) {
        count[c] += count[c - 1];
    }
    for (std::size_t i = n; i-- > 0;) {
        sa[--count[static_cast<unsigned char>(s[i])]] = static_cast<index_t>(i);
    }
    std::size_t classes = 1;
    rank[sa[0]] = 0;
    for (std::size_t r = 1; r < n; ++r) {
        if (s[sa[r]] != s[sa[r - 1]]) {
            ++classes;
        }
        rank[sa[r]] = static_cast<index_t>(classes - 1);
    }

    for (std::size_t k = 1; classes < n; k <<= 1) {
        // order by second key: suffixes without one come first
        std::size_t p = 0;
        for (std::size_t i = n - k; i < n; ++i) {
            tmp[p++] = static_cast<index_t>(i);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (sa[r] >= k) {
                tmp[p++] = static_cast<index_t>(sa[r] - k);
            }
        }
        // stable pass on first key
        std::fill(count.begin(), count.begin() + static_cast<std::ptrdiff_t>(classes) + 1, 0);
        for (std::size_t i = 0; i < n; ++i) {
            ++count[rank[i] + 1];
        }
        for (std::size_t c = 1; c <= classes; ++c) {
            count[c] += count[c - 1];
        }
        for (std::size_t j = 0; j < n; ++j) {
            sa[count[rank[tmp[j]]]++] = tmp[j];
        }

        auto second = [&](index_t i) -> std::int64_t {
            return i + k < n ? static_cast<std::int64_t>(rank[i + k]) : -1;
        };
        tmp[sa[0]] = 0;
        classes = 1;
        for (std::size_t r = 1; r < n; ++r) {
            const index_t a = sa[r - 1];
            const index_t b = sa[r];
            if (rank[a] != rank[b] || second(a) != second(b)) {
                ++classes;
            }
            tmp[b] = static_cast<index_t>(classes - 1);
        }
        rank.swap(tmp);
    }
    return sa;
}

/// Kasai et al. rank walk. lcp[r] = lcp(sa[r-1], sa[r]), lcp[0] = 0.
inline std::vector<index_t> build_lcp_array(std::string_view s, const std::vector<index_t>& sa,
                                            const std::vector<index_t>& rank) {
    const std::size_t n = s.size();
    std::vector<index_t> lcp(n, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        const std::size_t j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && s[i + h] == s[j + h]) {
            ++h;
        }
        lcp[rank[i]] = static_cast<index_t>(h);
        if (h > 0) {
            --h;
        }
    }
    return lcp;
}

} // namespace detail

/// Suffix array, inverse, LCP and shortest-unique-extension arrays over a Text.
///
/// All accessors are 1-based in both position and rank. Internally the arrays
/// are 0-based and carry no sentinel.
class SuffixIndex {
public:
    explicit SuffixIndex(Text text) : text_(std::move(text)) {
        const std::string_view s = text_.view();
        const std::size_t n = s.size();
        sa_ = detail::build_suffix_array(s);
        rank_.resize(n);
        for (std::size_t r = 0; r < n; ++r) {
            rank_[sa_[r]] = static_cast<detail::index_t>(r);
        }
        lcp_ = detail::build_lcp_array(s, sa_, rank_);

        // a substring starting at i is unique iff it is longer than both
        // neighbouring LCPs
        ext_.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t r = rank_[i];
            const std::size_t left = lcp_[r];
            const std::size_t right = r + 1 < n ? lcp_[r + 1] : 0;
            const std::size_t len = std::max(left, right) + 1;
            if (i + len <= n) {
                ext_[i] = static_cast<detail::index_t>(len);
            }
        }
    }

    const Text& text() const noexcept { return text_; }
    std::size_t size() const noexcept { return sa_.size(); }

    /// Start position of the r-th smallest suffix.
    position_t sa(std::size_t r) const { return sa_[r - 1] + 1; }
    /// Lexicographic rank of the suffix starting at i.
    std::size_t rank(position_t i) const { return rank_[i - 1] + 1; }
    /// LCP of suffixes sa(r-1) and sa(r); lcp(1) == 0.
    std::size_t lcp(std::size_t r) const { return lcp_[r - 1]; }

    /// Length of the shortest unique substring starting at i, or nullopt when
    /// the whole suffix S[i..n] repeats.
    std::optional<std::size_t> ext(position_t i) const {
        const auto e = ext_[i - 1];
        if (e == 0) {
            return std::nullopt;
        }
        return e;
    }

    /// #occ of S[iv] via two binary searches over the suffix array.
    std::size_t occurrence_count(const Interval& iv) const {
        const std::string_view pattern = substring(text_, iv);
        const std::string_view s = text_.view();
        auto prefix = [&](detail::index_t start) { return s.substr(start, pattern.size()); };
        auto lo = std::partition_point(sa_.begin(), sa_.end(),
                                       [&](detail::index_t p) { return prefix(p) < pattern; });
        auto hi = std::partition_point(lo, sa_.end(), [&](detail::index_t p) { return prefix(p) == pattern; });
        return static_cast<std::size_t>(hi - lo);
    }

    bool is_unique(const Interval& iv) const { return occurrence_count(iv) == 1; }

private:
    Text text_;
    std::vector<detail::index_t> sa_;
    std::vector<detail::index_t> rank_;
    std::vector<detail::index_t> lcp_;
    std::vector<detail::index_t> ext_;
};

inline SuffixIndex build_index(const Text& text) { return SuffixIndex(text); }

} // namespace sus

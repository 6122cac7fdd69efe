// Copyright 2026 The susbounds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "suffix_index.hpp"
#include "text.hpp"

namespace sus {

/// The set of minimal unique substrings of a text, sorted by begin.
///
/// For lists produced by compute_mus both begins and ends are strictly
/// increasing, so every lookup below is a binary search. The constructor does
/// not validate; use check_mus_invariants on lists from other sources.
class MusList {
public:
    MusList() = default;
    MusList(std::vector<Interval> items, std::size_t text_length)
        : items_(std::move(items)), text_length_(text_length) {}

    const std::vector<Interval>& items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    std::size_t text_length() const noexcept { return text_length_; }
    const Interval& operator[](std::size_t k) const { return items_[k]; }

    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

    /// Number of MUSs with begin <= p.
    std::size_t count_begin_at_most(position_t p) const {
        return static_cast<std::size_t>(std::partition_point(items_.begin(), items_.end(),
                                                             [&](const Interval& m) { return m.begin <= p; }) -
                                        items_.begin());
    }

    /// Index of the first MUS with end >= p (size() if none).
    std::size_t first_end_at_least(position_t p) const {
        return static_cast<std::size_t>(std::partition_point(items_.begin(), items_.end(),
                                                             [&](const Interval& m) { return m.end < p; }) -
                                        items_.begin());
    }

    /// Index of the first MUS with begin >= p (size() if none).
    std::size_t first_begin_at_least(position_t p) const {
        return static_cast<std::size_t>(std::partition_point(items_.begin(), items_.end(),
                                                             [&](const Interval& m) { return m.begin < p; }) -
                                        items_.begin());
    }

    std::optional<Interval> starting_at(position_t b) const {
        const std::size_t k = first_begin_at_least(b);
        if (k < items_.size() && items_[k].begin == b) {
            return items_[k];
        }
        return std::nullopt;
    }

    std::optional<Interval> ending_at(position_t e) const {
        const std::size_t k = first_end_at_least(e);
        if (k < items_.size() && items_[k].end == e) {
            return items_[k];
        }
        return std::nullopt;
    }

    bool contains_mus(const Interval& iv) const {
        const auto m = starting_at(iv.begin);
        return m && m->end == iv.end;
    }

private:
    std::vector<Interval> items_;
    std::size_t text_length_ = 0;
};

/// All MUSs, from the shortest-unique-extension array in O(n).
///
/// Candidate [i, y_i] is kept iff i is the last position with a defined
/// extension or y_{i+1} > y_i (otherwise S[i+1..y_i] is already unique).
inline MusList compute_mus(const SuffixIndex& index) {
    const std::size_t n = index.size();
    std::vector<Interval> items;
    for (position_t i = 1; i <= n; ++i) {
        const auto len = index.ext(i);
        if (!len) {
            break;
        }
        const position_t y = i + *len - 1;
        const auto next = i < n ? index.ext(i + 1) : std::nullopt;
        if (!next || i + *next > y) {
            items.push_back({i, y});
        }
    }
    return MusList(std::move(items), n);
}

inline MusList compute_mus(const Text& text) { return compute_mus(build_index(text)); }

/// Begins and ends strictly increase (no nesting) and 1 <= m <= n.
inline bool check_mus_invariants(const MusList& mus, std::size_t n) {
    if (mus.size() < 1 || mus.size() > n) {
        return false;
    }
    for (std::size_t k = 0; k < mus.size(); ++k) {
        if (!mus[k].valid_for(n)) {
            return false;
        }
        if (k > 0 && (mus[k - 1].begin >= mus[k].begin || mus[k - 1].end >= mus[k].end)) {
            return false;
        }
    }
    return true;
}

/// MUSs that are a point SUS for no position: M_S minus PS_S.
/// point_sus must be sorted.
inline std::vector<Interval> meaningless_mus(const MusList& mus, const std::vector<Interval>& point_sus) {
    std::vector<Interval> out;
    for (const Interval& m : mus) {
        if (!std::binary_search(point_sus.begin(), point_sus.end(), m)) {
            out.push_back(m);
        }
    }
    return out;
}

} // namespace sus

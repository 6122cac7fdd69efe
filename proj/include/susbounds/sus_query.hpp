// Copyright 2026 The susbounds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "mus.hpp"
#include "text.hpp"

namespace sus {

/// All shortest unique substrings for one query.
struct SusAnswer {
    Interval query;
    std::vector<Interval> sus; // sorted by begin
    std::size_t length = 0;
};

/// Smallest interval containing both arguments.
constexpr Interval cover(const Interval& mus, const Interval& query) noexcept {
    return {std::min(mus.begin, query.begin), std::max(mus.end, query.end)};
}

namespace detail {

/// Keeps the shortest candidates, deduplicated and sorted.
class ShortestCollector {
public:
    void offer(const Interval& iv) {
        const std::size_t len = iv.length();
        if (len < best_) {
            best_ = len;
            items_.clear();
        }
        if (len == best_) {
            items_.push_back(iv);
        }
    }

    SusAnswer finish(const Interval& query) && {
        std::sort(items_.begin(), items_.end());
        items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
        return SusAnswer{query, std::move(items_), best_};
    }

private:
    std::size_t best_ = std::numeric_limits<std::size_t>::max();
    std::vector<Interval> items_;
};

inline void require_query(const MusList& mus, const Interval& q, errc code) {
    if (!q.valid_for(mus.text_length())) {
        throw error(code, "query [" + std::to_string(q.begin) + "," + std::to_string(q.end) +
                              "] outside text of length " + std::to_string(mus.text_length()));
    }
}

} // namespace detail

/// Reference path: minimal covers over every MUS, O(m).
inline SusAnswer interval_sus_scan(const MusList& mus, const Interval& q) {
    detail::require_query(mus, q, errc::interval_out_of_range);
    detail::ShortestCollector best;
    for (const Interval& m : mus) {
        best.offer(cover(m, q));
    }
    return std::move(best).finish(q);
}

/// SUS_S([s,t]) by the MUS-cover characterization.
///
/// Every unique interval contains a MUS and every interval containing a MUS is
/// unique, so the answers are exactly the shortest covers. Since begins and
/// ends both increase, the MUSs split into four runs around q:
///   [0, lo)        begin <= s, end <  t : only the last one can be shortest
///   [lo, hi)       begin >  s, end <  t : inside q, so q itself is unique
///   [hi, lo)       begin <= s, end >= t : contain q, each is a candidate
///   [max(lo,hi),m) begin >  s, end >= t : only the first one can be shortest
inline SusAnswer interval_sus(const MusList& mus, const Interval& q) {
    detail::require_query(mus, q, errc::interval_out_of_range);
    const std::size_t m = mus.size();
    const std::size_t left = mus.count_begin_at_most(q.begin);
    const std::size_t right = mus.first_end_at_least(q.end);

    if (left < right) {
        return SusAnswer{q, {q}, q.length()};
    }
    detail::ShortestCollector best;
    if (right > 0) {
        best.offer(cover(mus[right - 1], q));
    }
    for (std::size_t k = right; k < left; ++k) {
        best.offer(mus[k]);
    }
    if (left < m) {
        best.offer(cover(mus[left], q));
    }
    return std::move(best).finish(q);
}

inline SusAnswer point_sus(const MusList& mus, position_t p) {
    detail::require_query(mus, {p, p}, errc::position_out_of_range);
    return interval_sus(mus, {p, p});
}

inline SusAnswer point_sus_scan(const MusList& mus, position_t p) {
    detail::require_query(mus, {p, p}, errc::position_out_of_range);
    return interval_sus_scan(mus, {p, p});
}

} // namespace sus

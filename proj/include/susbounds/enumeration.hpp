// Copyright 2026 The susbounds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mus.hpp"
#include "rational.hpp"
#include "sus_query.hpp"
#include "text.hpp"

namespace sus {

/// How a point SUS relates to the MUS it was grown from.
enum class SusKind {
    left,         // not a MUS; some MUS [i,y] with i > x (grown leftwards)
    mus,          // a MUS itself
    right,        // not a MUS; some MUS [x,j] with j < y (grown rightwards)
    unclassified, // none of the above; never produced for a correct PS_S
};

inline const char* kind_name(SusKind k) noexcept {
    switch (k) {
        case SusKind::left: return "LS";
        case SusKind::mus: return "MS";
        case SusKind::right: return "RS";
        case SusKind::unclassified: return "??";
    }
    return "??";
}

/// PS_S with its LS/MS/RS decomposition. All sequences are sorted.
struct PointSusSet {
    std::size_t n = 0;
    std::vector<Interval> ps;
    std::vector<SusKind> kind; // parallel to ps
    std::vector<Interval> ls;
    std::vector<Interval> ms;
    std::vector<Interval> rs;
    std::vector<Interval> unclassified;

    std::optional<SusKind> kind_of(const Interval& iv) const {
        auto it = std::lower_bound(ps.begin(), ps.end(), iv);
        if (it == ps.end() || *it != iv) {
            return std::nullopt;
        }
        return kind[static_cast<std::size_t>(it - ps.begin())];
    }
};

inline SusKind classify(const MusList& mus, const Interval& iv) {
    if (mus.contains_mus(iv)) {
        return SusKind::mus;
    }
    if (const auto m = mus.starting_at(iv.begin); m && m->end < iv.end) {
        return SusKind::right;
    }
    if (const auto m = mus.ending_at(iv.end); m && m->begin > iv.begin) {
        return SusKind::left;
    }
    return SusKind::unclassified;
}

inline void sort_unique(std::vector<Interval>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Union of point_sus(p) over every position, decomposed into LS/MS/RS.
inline PointSusSet enumerate_point_sus(const MusList& mus) {
    PointSusSet out;
    out.n = mus.text_length();
    for (position_t p = 1; p <= out.n; ++p) {
        auto answer = point_sus(mus, p);
        out.ps.insert(out.ps.end(), answer.sus.begin(), answer.sus.end());
    }
    sort_unique(out.ps);
    out.kind.reserve(out.ps.size());
    for (const Interval& iv : out.ps) {
        const SusKind k = classify(mus, iv);
        out.kind.push_back(k);
        switch (k) {
            case SusKind::left: out.ls.push_back(iv); break;
            case SusKind::mus: out.ms.push_back(iv); break;
            case SusKind::right: out.rs.push_back(iv); break;
            case SusKind::unclassified: out.unclassified.push_back(iv); break;
        }
    }
    return out;
}

/// The charging function f, its inverse image and the set U of doubly
/// charged positions.
struct ChargingMap {
    std::vector<std::pair<Interval, position_t>> f; // sorted by interval
    std::vector<std::vector<Interval>> finv;        // finv[u - 1], each sorted
    std::vector<position_t> doubly_charged;         // U, ascending

    std::optional<position_t> charge(const Interval& iv) const {
        auto it = std::lower_bound(f.begin(), f.end(), iv,
                                   [](const auto& entry, const Interval& key) { return entry.first < key; });
        if (it == f.end() || it->first != iv) {
            return std::nullopt;
        }
        return it->second;
    }

    const std::vector<Interval>& inverse(position_t u) const { return finv[u - 1]; }
};

/// f([x,y]) = x on LS and MS, y on RS. Unclassified intervals are left
/// uncharged, which then shows up as a conservation failure.
inline ChargingMap build_charging(const PointSusSet& ps) {
    ChargingMap out;
    out.finv.resize(ps.n);
    out.f.reserve(ps.ps.size());
    for (std::size_t k = 0; k < ps.ps.size(); ++k) {
        const Interval& iv = ps.ps[k];
        position_t u = 0;
        switch (ps.kind[k]) {
            case SusKind::left:
            case SusKind::mus: u = iv.begin; break;
            case SusKind::right: u = iv.end; break;
            case SusKind::unclassified: continue;
        }
        out.f.emplace_back(iv, u);
        out.finv[u - 1].push_back(iv);
    }
    for (position_t u = 1; u <= ps.n; ++u) {
        if (out.finv[u - 1].size() == 2) {
            out.doubly_charged.push_back(u);
        }
    }
    return out;
}

/// Positions u in U whose preimage does not have the form
/// {[b_i, u] in RS, [u, e_j] in LS or MS} with i < j. The two members need
/// not have equal length, so they are not both in SUS(u) in general.
inline std::vector<position_t> finv2_structure_violations(const ChargingMap& charging, const PointSusSet& ps,
                                                          const MusList& mus) {
    std::vector<position_t> bad;
    for (const position_t u : charging.doubly_charged) {
        const auto& pre = charging.inverse(u);
        const Interval& a = pre[0];
        const Interval& b = pre[1];
        bool ok = pre.size() == 2 && a.begin < b.begin && a.end == u && b.begin == u;
        ok = ok && ps.kind_of(a) == SusKind::right;
        const auto kb = ps.kind_of(b);
        ok = ok && (kb == SusKind::left || kb == SusKind::mus);
        if (ok) {
            const std::size_t i = mus.first_begin_at_least(a.begin);
            const std::size_t j = mus.first_end_at_least(b.end);
            ok = i < mus.size() && mus[i].begin == a.begin && j < mus.size() && mus[j].end == b.end && i < j;
        }
        if (!ok) {
            bad.push_back(u);
        }
    }
    return bad;
}

inline bool check_finv2_structure(const ChargingMap& charging, const PointSusSet& ps, const MusList& mus) {
    return finv2_structure_violations(charging, ps, mus).empty();
}

/// Elements of RS not in SUS(y) plus elements of LS not in SUS(x).
inline std::vector<Interval> extension_query_violations(const PointSusSet& ps, const MusList& mus) {
    std::vector<Interval> bad;
    auto answers = [&](position_t p, const Interval& iv) {
        const auto a = point_sus(mus, p);
        return std::binary_search(a.sus.begin(), a.sus.end(), iv);
    };
    for (const Interval& iv : ps.rs) {
        if (!answers(iv.end, iv)) {
            bad.push_back(iv);
        }
    }
    for (const Interval& iv : ps.ls) {
        if (!answers(iv.begin, iv)) {
            bad.push_back(iv);
        }
    }
    return bad;
}

/// IS_S: answers that are non-trivial for at least one query.
///
/// An answer is trivial only when it equals a unique query of length >= 2, so
/// IS_S is PS_S plus the answers to repeating queries [s,t], s < t. [s,t]
/// repeats iff it ends before the first MUS beginning at or after s.
inline std::vector<Interval> enumerate_interval_sus(const MusList& mus) {
    const std::size_t n = mus.text_length();
    std::vector<Interval> out;
    for (position_t s = 1; s <= n; ++s) {
        const std::size_t k = mus.first_begin_at_least(s);
        const position_t last_repeating = k < mus.size() ? mus[k].end - 1 : n;
        for (position_t t = s; t <= last_repeating || t == s; ++t) {
            const auto answer = interval_sus(mus, {s, t});
            out.insert(out.end(), answer.sus.begin(), answer.sus.end());
        }
    }
    sort_unique(out);
    return out;
}

/// Same set, by asking every one of the n(n+1)/2 queries.
inline std::vector<Interval> enumerate_interval_sus_all_queries(const MusList& mus) {
    const std::size_t n = mus.text_length();
    std::vector<Interval> out;
    for (position_t s = 1; s <= n; ++s) {
        for (position_t t = s; t <= n; ++t) {
            const Interval q{s, t};
            for (const Interval& a : interval_sus(mus, q).sus) {
                if (!(s != t && a == q)) {
                    out.push_back(a);
                }
            }
        }
    }
    sort_unique(out);
    return out;
}

/// One inequality instance: lhs (relation) rhs.
struct BoundCheck {
    std::string id;
    std::string formula;
    std::string relation; // "<=" or "=="
    std::int64_t lhs = 0;
    Rational rhs;
    bool pass = false;

    bool tight() const { return Rational(lhs) == rhs; }
};

struct BoundReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t ps_count = 0;
    std::optional<std::size_t> is_count;
    std::size_t ls_count = 0;
    std::size_t ms_count = 0;
    std::size_t rs_count = 0;
    std::size_t u_count = 0;
    std::vector<BoundCheck> checks;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
    }

    const BoundCheck* find(std::string_view id) const {
        for (const auto& c : checks) {
            if (c.id == id) {
                return &c;
            }
        }
        return nullptr;
    }
};

/// Everything needed to evaluate the bounds for one text.
struct SusAnalysis {
    MusList mus;
    PointSusSet point;
    ChargingMap charging;
    std::optional<std::vector<Interval>> interval; // IS_S when requested
};

inline SusAnalysis analyze(const Text& text, bool with_interval = true) {
    SusAnalysis a;
    a.mus = compute_mus(text);
    a.point = enumerate_point_sus(a.mus);
    a.charging = build_charging(a.point);
    if (with_interval) {
        a.interval = enumerate_interval_sus(a.mus);
    }
    return a;
}

inline BoundReport evaluate_bounds(const SusAnalysis& a) {
    BoundReport r;
    const auto n = static_cast<std::int64_t>(a.mus.text_length());
    const auto m = static_cast<std::int64_t>(a.mus.size());
    r.n = a.mus.text_length();
    r.m = a.mus.size();
    r.ps_count = a.point.ps.size();
    r.ls_count = a.point.ls.size();
    r.ms_count = a.point.ms.size();
    r.rs_count = a.point.rs.size();
    r.u_count = a.charging.doubly_charged.size();
    if (a.interval) {
        r.is_count = a.interval->size();
    }
    const auto ps = static_cast<std::int64_t>(r.ps_count);

    auto le = [&](std::string id, std::string formula, std::int64_t lhs, Rational rhs) {
        r.checks.push_back({std::move(id), std::move(formula), "<=", lhs, rhs, Rational(lhs) <= rhs});
    };
    auto eq = [&](std::string id, std::string formula, std::int64_t lhs, Rational rhs) {
        r.checks.push_back({std::move(id), std::move(formula), "==", lhs, rhs, Rational(lhs) == rhs});
    };

    le("ps_le_2n_minus_m", "|PS| <= 2n - m", ps, 2 * n - m);
    le("ps_le_n_plus_m_minus_1", "|PS| <= n + m - 1", ps, n + m - 1);
    le("ps_le_3n_minus_1_half", "|PS| <= (3n - 1)/2", ps, Rational(3 * n - 1, 2));
    if (r.is_count) {
        le("is_le_2n_minus_m", "|IS| <= 2n - m", static_cast<std::int64_t>(*r.is_count), 2 * n - m);
    }
    le("mus_at_least_1", "1 <= m", 1, m);
    le("mus_le_n", "m <= n", m, n);
    eq("mus_invariants", "MUS list sorted, non-nested, in range", check_mus_invariants(a.mus, r.n) ? 1 : 0, 1);
    le("ls_le_n_minus_m", "|LS| <= n - m", static_cast<std::int64_t>(r.ls_count), n - m);
    le("rs_le_n_minus_m", "|RS| <= n - m", static_cast<std::int64_t>(r.rs_count), n - m);
    le("ms_le_m", "|MS| <= m", static_cast<std::int64_t>(r.ms_count), m);
    eq("decomposition_complete", "|PS| - |LS| - |MS| - |RS| == 0",
       ps - static_cast<std::int64_t>(r.ls_count + r.ms_count + r.rs_count), 0);

    std::int64_t max_finv = 0;
    std::int64_t max_finv_outside = 0;
    std::int64_t total = 0;
    const position_t b1 = a.mus[0].begin;
    const position_t bm = a.mus[a.mus.size() - 1].begin;
    for (position_t u = 1; u <= r.n; ++u) {
        const auto c = static_cast<std::int64_t>(a.charging.inverse(u).size());
        total += c;
        max_finv = std::max(max_finv, c);
        if (u <= b1 || u > bm) {
            max_finv_outside = std::max(max_finv_outside, c);
        }
    }
    le("finv_le_2", "max_u |f^-1(u)| <= 2", max_finv, 2);
    le("finv_outside_le_1", "max_{u <= b1 or u > bm} |f^-1(u)| <= 1", max_finv_outside, 1);
    eq("charging_conservation", "sum_u |f^-1(u)| == |PS|", total, ps);
    le("u_le_m_minus_1", "|U| <= m - 1", static_cast<std::int64_t>(r.u_count), m - 1);
    eq("finv2_structure", "u in U with malformed f^-1(u) == 0",
       static_cast<std::int64_t>(finv2_structure_violations(a.charging, a.point, a.mus).size()), 0);
    eq("extension_queries", "RS not in SUS(y) or LS not in SUS(x) == 0",
       static_cast<std::int64_t>(extension_query_violations(a.point, a.mus).size()), 0);
    return r;
}

/// Evaluates every bound for text. with_interval=false skips IS_S, which
/// costs one query per repeating interval.
inline BoundReport verify_bounds(const Text& text, bool with_interval = true) {
    return evaluate_bounds(analyze(text, with_interval));
}

} // namespace sus

// Copyright 2026 The susbounds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Brute-force reference implementations. Nothing in this header's naive_*
// functions touches the suffix index, the MUS list or the cover queries; those
// are only pulled in by compare_with_oracle and the sweeps, which check the
// fast paths against the naive ones.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "enumeration.hpp"
#include "error.hpp"
#include "mus.hpp"
#include "suffix_index.hpp"
#include "sus_query.hpp"
#include "text.hpp"

namespace sus::oracle {

/// #occ by sliding the pattern over every start position.
inline std::size_t naive_occurrences(const Text& text, const Interval& iv) {
    const std::string_view s = text.view();
    const std::string_view w = substring(text, iv);
    std::size_t count = 0;
    for (std::size_t i = 0; i + w.size() <= s.size(); ++i) {
        if (s.compare(i, w.size(), w) == 0) {
            ++count;
        }
    }
    return count;
}

inline bool naive_unique(const Text& text, const Interval& iv) { return naive_occurrences(text, iv) == 1; }

/// Uniqueness of every interval from pairwise longest common extensions.
///
/// S[i..j] is unique iff its length exceeds lce(i, k) for every k != i. The
/// table is filled diagonal by diagonal in O(n^2) time and O(n) space.
class UniquenessTable {
public:
    explicit UniquenessTable(const Text& text) : n_(text.size()), max_lce_(text.size() + 1, 0) {
        for (std::size_t d = 1; d < n_; ++d) {
            std::size_t run = 0;
            for (position_t i = n_ - d; i >= 1; --i) {
                run = text[i] == text[i + d] ? run + 1 : 0;
                max_lce_[i] = std::max(max_lce_[i], run);
                max_lce_[i + d] = std::max(max_lce_[i + d], run);
            }
        }
    }

    std::size_t size() const noexcept { return n_; }

    bool unique(const Interval& iv) const { return iv.length() > max_lce_[iv.begin]; }

    /// Length of the shortest unique substring starting at i, 0 if none.
    std::size_t shortest_unique_from(position_t i) const {
        const std::size_t len = max_lce_[i] + 1;
        return i + len - 1 <= n_ ? len : 0;
    }

private:
    std::size_t n_;
    std::vector<std::size_t> max_lce_;
};

/// Straight-from-the-definition SUS/MUS sets over one text.
class NaiveSus {
public:
    explicit NaiveSus(const Text& text) : text_(text), table_(text) {}

    const UniquenessTable& table() const noexcept { return table_; }

    std::vector<Interval> mus() const {
        std::vector<Interval> out;
        const std::size_t n = text_.size();
        for (position_t i = 1; i <= n; ++i) {
            for (position_t j = i; j <= n; ++j) {
                if (!table_.unique({i, j})) {
                    continue;
                }
                if (i == j || (!table_.unique({i + 1, j}) && !table_.unique({i, j - 1}))) {
                    out.push_back({i, j});
                }
            }
        }
        return out;
    }

    /// Shortest unique intervals containing q, tried in order of length.
    std::vector<Interval> interval_sus(const Interval& q) const {
        const std::size_t n = text_.size();
        for (std::size_t len = q.length(); len <= n; ++len) {
            std::vector<Interval> found;
            const position_t lo = q.end >= len ? q.end - len + 1 : 1;
            const position_t hi = std::min(q.begin, n - len + 1);
            for (position_t i = lo; i <= hi; ++i) {
                if (table_.unique({i, i + len - 1})) {
                    found.push_back({i, i + len - 1});
                }
            }
            if (!found.empty()) {
                return found;
            }
        }
        return {};
    }

    std::vector<Interval> point_sus(position_t p) const { return interval_sus({p, p}); }

    std::vector<Interval> ps_set() const {
        std::vector<Interval> out;
        for (position_t p = 1; p <= text_.size(); ++p) {
            const auto a = point_sus(p);
            out.insert(out.end(), a.begin(), a.end());
        }
        sort_unique(out);
        return out;
    }

    /// Answers that are non-trivial for some query: an answer is trivial for
    /// [s,t] iff it equals [s,t] and s != t.
    std::vector<Interval> is_set() const {
        std::vector<Interval> out;
        const std::size_t n = text_.size();
        for (position_t s = 1; s <= n; ++s) {
            for (position_t t = s; t <= n; ++t) {
                const Interval q{s, t};
                for (const Interval& a : interval_sus(q)) {
                    if (!(s != t && a == q)) {
                        out.push_back(a);
                    }
                }
            }
        }
        sort_unique(out);
        return out;
    }

private:
    Text text_;
    UniquenessTable table_;
};

inline std::vector<Interval> naive_mus(const Text& text) { return NaiveSus(text).mus(); }
inline std::vector<Interval> naive_point_sus(const Text& text, position_t p) {
    if (p < 1 || p > text.size()) {
        throw error(errc::position_out_of_range, "position " + std::to_string(p));
    }
    return NaiveSus(text).point_sus(p);
}
inline std::vector<Interval> naive_interval_sus(const Text& text, const Interval& q) {
    if (!q.valid_for(text.size())) {
        throw error(errc::interval_out_of_range, "query outside text");
    }
    return NaiveSus(text).interval_sus(q);
}
inline std::vector<Interval> naive_ps_set(const Text& text) { return NaiveSus(text).ps_set(); }
inline std::vector<Interval> naive_is_set(const Text& text) { return NaiveSus(text).is_set(); }

namespace detail {

inline std::string describe(const std::vector<Interval>& v) {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < v.size(); ++k) {
        os << (k ? "," : "") << v[k];
    }
    os << '}';
    return os.str();
}

} // namespace detail

struct CompareOptions {
    /// Also check SuffixIndex::occurrence_count on every interval; O(n^3 log n).
    std::size_t occurrence_check_max_n = 16;
};

/// Differences between every fast path and the oracle, one line each.
inline std::vector<std::string> compare_with_oracle(const Text& text, const SusAnalysis& fast,
                                                    const CompareOptions& opts = {}) {
    std::vector<std::string> diffs;
    const std::size_t n = text.size();
    const NaiveSus naive(text);
    const SuffixIndex index(text);

    for (position_t i = 1; i <= n; ++i) {
        const std::size_t expect = naive.table().shortest_unique_from(i);
        const auto got = index.ext(i);
        if ((got ? *got : 0) != expect) {
            diffs.push_back("ext(" + std::to_string(i) + ")");
        }
    }
    if (n <= opts.occurrence_check_max_n) {
        for (position_t i = 1; i <= n; ++i) {
            for (position_t j = i; j <= n; ++j) {
                if (index.occurrence_count({i, j}) != naive_occurrences(text, {i, j})) {
                    diffs.push_back("occurrence_count([" + std::to_string(i) + "," + std::to_string(j) + "])");
                }
            }
        }
    }
    if (const auto expect = naive.mus(); expect != fast.mus.items()) {
        diffs.push_back("compute_mus: fast " + detail::describe(fast.mus.items()) + " oracle " +
                        detail::describe(expect));
    }
    for (position_t s = 1; s <= n; ++s) {
        for (position_t t = s; t <= n; ++t) {
            const Interval q{s, t};
            const auto expect = naive.interval_sus(q);
            const auto got = interval_sus(fast.mus, q).sus;
            if (got != expect) {
                std::ostringstream os;
                os << (s == t ? "point_sus" : "interval_sus") << q << ": fast " << detail::describe(got)
                   << " oracle " << detail::describe(expect);
                diffs.push_back(os.str());
            }
            if (interval_sus_scan(fast.mus, q).sus != got) {
                std::ostringstream os;
                os << "interval_sus" << q << ": window and full scan disagree";
                diffs.push_back(os.str());
            }
        }
    }
    if (naive.ps_set() != fast.point.ps) {
        diffs.push_back("enumerate_point_sus");
    }
    if (fast.interval && naive.is_set() != *fast.interval) {
        diffs.push_back("enumerate_interval_sus: fast " + std::to_string(fast.interval->size()) + " oracle " +
                        std::to_string(naive.is_set().size()));
    }
    return diffs;
}

/// A bound failure or oracle disagreement on one string.
struct Finding {
    std::string text;
    std::string what;
};

struct Witness {
    std::string text;
    std::size_t m = 0;
    std::size_t ps = 0;
    std::size_t is = 0;
};

/// Aggregate over all canonical strings of one length.
struct SweepResult {
    std::size_t n = 0;
    std::size_t sigma = 0;
    std::size_t strings = 0;
    std::size_t max_ps = 0;
    std::size_t max_is = 0;
    std::size_t ps_witness_count = 0;
    std::size_t is_witness_count = 0;
    std::vector<Witness> ps_witnesses; // first few, lexicographic
    std::vector<Witness> is_witnesses;
    std::vector<Finding> violations;
    std::vector<Finding> mismatches;
};

struct SweepOptions {
    std::size_t budget = 5'000'000; // max canonical strings over the whole sweep
    unsigned jobs = 1;
    bool compare_oracle = true;
    std::size_t witness_limit = 8;
};

/// Number of strings of length n over at most sigma symbols up to renaming:
/// sum_{k <= sigma} S(n, k). Saturates at UINT64_MAX.
inline std::uint64_t canonical_count(std::size_t n, std::size_t sigma) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    const std::size_t cap = std::min(n, sigma);
    std::vector<std::uint64_t> row(cap + 1, 0); // S(len, k)
    row[0] = 1;
    for (std::size_t len = 1; len <= n; ++len) {
        for (std::size_t k = cap; k >= 1; --k) {
            const std::uint64_t a = row[k];
            const std::uint64_t b = row[k - 1];
            if (a != 0 && k > kMax / a) {
                row[k] = kMax;
            } else {
                const std::uint64_t ka = k * a;
                row[k] = ka > kMax - b ? kMax : ka + b;
            }
        }
        row[0] = 0;
    }
    std::uint64_t total = 0;
    for (std::size_t k = 1; k <= cap; ++k) {
        total = row[k] > kMax - total ? kMax : total + row[k];
    }
    return total;
}

/// Every length-n string whose symbols appear in order 'a', 'b', ... of first
/// occurrence, using at most sigma of them. Lexicographic order.
inline std::vector<std::string> canonical_strings(std::size_t n, std::size_t sigma) {
    std::vector<std::string> out;
    std::string cur(n, 'a');
    auto rec = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        const std::size_t limit = std::min(used + 1, sigma);
        for (std::size_t c = 0; c < limit; ++c) {
            cur[pos] = static_cast<char>('a' + c);
            self(self, pos + 1, std::max(used, c + 1));
        }
    };
    if (n > 0 && sigma > 0) {
        rec(rec, 0, 0);
    }
    return out;
}

/// Bound failures and (optionally) oracle disagreements for one text.
struct StringVerdict {
    std::size_t m = 0;
    std::size_t ps = 0;
    std::size_t is = 0;
    std::vector<std::string> violations;
    std::vector<std::string> mismatches;
};

inline StringVerdict evaluate_string(const Text& text, bool compare_oracle) {
    const SusAnalysis a = analyze(text, true);
    const BoundReport r = evaluate_bounds(a);
    StringVerdict v;
    v.m = r.m;
    v.ps = r.ps_count;
    v.is = r.is_count.value_or(0);
    for (const auto& c : r.checks) {
        if (!c.pass) {
            v.violations.push_back(c.id + " (" + std::to_string(c.lhs) + " " + c.relation + " " + c.rhs.str() + ")");
        }
    }
    if (compare_oracle) {
        v.mismatches = compare_with_oracle(text, a);
    }
    return v;
}

namespace detail {

/// Runs fn(i) for i in [0, count) over `jobs` threads; results by index.
template <typename Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn fn) {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out(count);
    jobs = std::max(1u, jobs);
    if (jobs == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) {
            out[i] = fn(i);
        }
        return out;
    }
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += jobs) {
                out[i] = fn(i);
            }
        });
    }
    workers.clear();
    return out;
}

} // namespace detail

/// Exhaustive run over every canonical string of length 1..n_max.
inline std::vector<SweepResult> sweep(std::size_t n_max, std::size_t sigma, const SweepOptions& opts = {}) {
    if (sigma < 1 || sigma > 26) {
        throw error(errc::param_out_of_range, "sweep alphabet must be 1..26");
    }
    std::uint64_t total = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto c = canonical_count(n, sigma);
        total = c > std::numeric_limits<std::uint64_t>::max() - total ? c : total + c;
        if (total > opts.budget) {
            throw error(errc::budget_exceeded, "sweep n<=" + std::to_string(n_max) + " sigma=" +
                                                   std::to_string(sigma) + " exceeds budget of " +
                                                   std::to_string(opts.budget) + " strings");
        }
    }

    std::vector<SweepResult> results;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto strings = canonical_strings(n, sigma);
        const auto verdicts = detail::parallel_map(strings.size(), opts.jobs, [&](std::size_t i) {
            return evaluate_string(make_text(strings[i]), opts.compare_oracle);
        });

        SweepResult r;
        r.n = n;
        r.sigma = sigma;
        r.strings = strings.size();
        for (const auto& v : verdicts) {
            r.max_ps = std::max(r.max_ps, v.ps);
            r.max_is = std::max(r.max_is, v.is);
        }
        // strings are lexicographic, so witnesses come out sorted
        for (std::size_t i = 0; i < strings.size(); ++i) {
            const auto& v = verdicts[i];
            const Witness w{strings[i], v.m, v.ps, v.is};
            if (v.ps == r.max_ps && r.ps_witness_count++ < opts.witness_limit) {
                r.ps_witnesses.push_back(w);
            }
            if (v.is == r.max_is && r.is_witness_count++ < opts.witness_limit) {
                r.is_witnesses.push_back(w);
            }
            for (const auto& msg : v.violations) {
                r.violations.push_back({strings[i], msg});
            }
            for (const auto& msg : v.mismatches) {
                r.mismatches.push_back({strings[i], msg});
            }
        }
        results.push_back(std::move(r));
    }
    return results;
}

/// Alphabet used for random strings: the first sigma bytes from 'a' upward.
inline std::string random_string(std::mt19937_64& rng, std::size_t max_len, std::size_t sigma) {
    std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
    std::uniform_int_distribution<std::size_t> sym_dist(0, sigma - 1);
    std::string s(len_dist(rng), 'a');
    for (char& c : s) {
        c = static_cast<char>(static_cast<unsigned char>('a' + sym_dist(rng)));
    }
    return s;
}

struct RandomRunResult {
    std::size_t strings = 0;
    std::uint64_t seed = 0;
    std::vector<Finding> violations;
    std::vector<Finding> mismatches;
};

/// count random strings, alphabet sizes taken round-robin from sigmas.
inline RandomRunResult random_run(std::size_t count, std::size_t max_len, const std::vector<std::size_t>& sigmas,
                                  std::uint64_t seed, unsigned jobs = 1, bool compare_oracle = true) {
    if (max_len < 1 || sigmas.empty()) {
        throw error(errc::param_out_of_range, "random run needs max_len >= 1 and an alphabet size");
    }
    for (const auto s : sigmas) {
        if (s < 1 || s > 256 - 'a') {
            throw error(errc::param_out_of_range, "alphabet size must be 1.." + std::to_string(256 - 'a'));
        }
    }
    std::mt19937_64 rng(seed);
    std::vector<std::string> strings;
    strings.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        strings.push_back(random_string(rng, max_len, sigmas[i % sigmas.size()]));
    }
    const auto verdicts = detail::parallel_map(strings.size(), jobs, [&](std::size_t i) {
        return evaluate_string(make_text(strings[i]), compare_oracle);
    });
    RandomRunResult out;
    out.strings = count;
    out.seed = seed;
    for (std::size_t i = 0; i < strings.size(); ++i) {
        for (const auto& msg : verdicts[i].violations) {
            out.violations.push_back({strings[i], msg});
        }
        for (const auto& msg : verdicts[i].mismatches) {
            out.mismatches.push_back({strings[i], msg});
        }
    }
    return out;
}

} // namespace sus::oracle

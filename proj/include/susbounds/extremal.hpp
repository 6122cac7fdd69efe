// Copyright 2026 The susbounds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "enumeration.hpp"
#include "error.hpp"
#include "mus.hpp"
#include "rational.hpp"
#include "text.hpp"

namespace sus {

enum class Family { point_tight, sigma_family, interval_family };

inline const char* family_name(Family f) noexcept {
    switch (f) {
        case Family::point_tight: return "point-tight";
        case Family::sigma_family: return "sigma-family";
        case Family::interval_family: return "interval-family";
    }
    return "?";
}

/// A generated extremal string and the counts its construction predicts.
struct ExtremalSpec {
    Family family = Family::point_tight;
    std::string params; // echo, e.g. "k=3" or "n=8,sigma=3" or "eps=1"
    Text text = make_text("a");
    std::size_t predicted_count = 0; // |PS| for the point families, |IS| for the interval family
    std::optional<std::size_t> predicted_mus_count;

    // interval family only
    std::optional<Rational> eps;
    std::optional<std::size_t> filler_run; // x = ceil(3 / (2 eps))
    std::optional<Rational> gap;           // (2n - 3) - (2 - eps) n
    bool gap_within_5eps = false;          // gap <= 5 eps
    bool count_exceeds_linear = false;     // 4x + 3 > (2 - eps) n
};

/// Separator byte of the point families.
inline constexpr unsigned char kSeparator = 'x';
inline constexpr std::size_t kMaxDistinctSymbols = 255;

/// i-th distinct non-separator byte: 'a'..'z' without 'x', then 0x7b..0xff,
/// then 0x00..0x60.
inline unsigned char distinct_symbol(std::size_t i) {
    static const auto table = [] {
        std::array<unsigned char, kMaxDistinctSymbols> t{};
        std::size_t k = 0;
        auto push_range = [&](int lo, int hi) {
            for (int c = lo; c <= hi; ++c) {
                if (c != kSeparator) {
                    t[k++] = static_cast<unsigned char>(c);
                }
            }
        };
        push_range('a', 'z');
        push_range('z' + 1, 0xff);
        push_range(0, 'a' - 1);
        return t;
    }();
    return table.at(i);
}

/// a_1 x a_2 x ... x a_k, n = 2k - 1, with (3n - 1)/2 point SUSs.
inline ExtremalSpec gen_point_tight(std::int64_t k) {
    if (k < 3) {
        throw error(errc::param_out_of_range, "point-tight needs k >= 3, got " + std::to_string(k));
    }
    if (static_cast<std::uint64_t>(k) > kMaxDistinctSymbols) {
        throw error(errc::alphabet_too_small, "bytes supply at most 255 symbols besides the separator");
    }
    std::string s;
    for (std::int64_t i = 0; i < k; ++i) {
        if (i > 0) {
            s.push_back(static_cast<char>(kSeparator));
        }
        s.push_back(static_cast<char>(distinct_symbol(static_cast<std::size_t>(i))));
    }
    const std::size_t n = s.size();
    ExtremalSpec spec;
    spec.family = Family::point_tight;
    spec.params = "k=" + std::to_string(k);
    spec.text = Text(std::move(s));
    spec.predicted_count = (3 * n - 1) / 2;
    return spec;
}

/// a_1 x a_2 x ... a_{sigma-1} x^{n-2sigma+3}: length n, sigma symbols,
/// n + sigma - 2 point SUSs.
inline ExtremalSpec gen_sigma_family(std::int64_t n, std::int64_t sigma) {
    if (n < 2 || sigma < 2 || 2 * sigma > n + 3) {
        throw error(errc::param_out_of_range, "sigma-family needs n >= 2 and 2 <= sigma <= (n+3)/2, got n=" +
                                                  std::to_string(n) + " sigma=" + std::to_string(sigma));
    }
    if (static_cast<std::uint64_t>(sigma - 1) > kMaxDistinctSymbols) {
        throw error(errc::alphabet_too_small, "bytes supply at most 256 symbols");
    }
    std::string s;
    for (std::int64_t i = 0; i < sigma - 1; ++i) {
        if (i > 0) {
            s.push_back(static_cast<char>(kSeparator));
        }
        s.push_back(static_cast<char>(distinct_symbol(static_cast<std::size_t>(i))));
    }
    s.append(static_cast<std::size_t>(n - 2 * sigma + 3), static_cast<char>(kSeparator));
    ExtremalSpec spec;
    spec.family = Family::sigma_family;
    spec.params = "n=" + std::to_string(n) + ",sigma=" + std::to_string(sigma);
    spec.text = Text(std::move(s));
    spec.predicted_count = static_cast<std::size_t>(n + sigma - 2);
    return spec;
}

/// c_1 a^x c_2 a^x c_3 with x = ceil(3/(2 eps)): 4x + 3 non-trivial interval
/// SUSs and exactly three MUSs.
inline ExtremalSpec gen_interval_family(Rational eps) {
    if (eps <= Rational(0)) {
        throw error(errc::param_out_of_range, "interval-family needs eps > 0, got " + eps.str());
    }
    const std::int64_t x = (Rational(3) / (Rational(2) * eps)).ceil();
    if (x > (std::int64_t{1} << 30)) {
        throw error(errc::param_out_of_range, "eps " + eps.str() + " gives an impractically long string");
    }
    std::string s;
    s.push_back('b');
    s.append(static_cast<std::size_t>(x), 'a');
    s.push_back('c');
    s.append(static_cast<std::size_t>(x), 'a');
    s.push_back('d');
    const auto n = static_cast<std::int64_t>(s.size());

    ExtremalSpec spec;
    spec.family = Family::interval_family;
    spec.params = "eps=" + eps.str();
    spec.text = Text(std::move(s));
    spec.predicted_count = static_cast<std::size_t>(4 * x + 3);
    spec.predicted_mus_count = 3;
    spec.eps = eps;
    spec.filler_run = static_cast<std::size_t>(x);
    const Rational linear = (Rational(2) - eps) * Rational(n);
    spec.gap = Rational(2 * n - 3) - linear;
    spec.gap_within_5eps = *spec.gap <= Rational(5) * eps;
    spec.count_exceeds_linear = Rational(4 * x + 3) > linear;
    return spec;
}

/// Counts actually measured on a generated string.
struct ExtremalMeasurement {
    std::size_t count = 0; // |PS| or |IS| matching the family
    std::size_t mus_count = 0;
    bool count_matches = false;
    bool mus_count_matches = true; // vacuous when not predicted

    bool match() const { return count_matches && mus_count_matches; }
};

inline ExtremalMeasurement measure(const ExtremalSpec& spec) {
    const MusList mus = compute_mus(spec.text);
    ExtremalMeasurement out;
    out.mus_count = mus.size();
    out.count = spec.family == Family::interval_family ? enumerate_interval_sus(mus).size()
                                                       : enumerate_point_sus(mus).ps.size();
    out.count_matches = out.count == spec.predicted_count;
    if (spec.predicted_mus_count) {
        out.mus_count_matches = out.mus_count == *spec.predicted_mus_count;
    }
    return out;
}

} // namespace sus

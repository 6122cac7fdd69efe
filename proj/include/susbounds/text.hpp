// Copyright 2026 The susbounds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <fstream>
#include <iterator>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include "error.hpp"

namespace sus {

/// 1-based text position.
using position_t = std::size_t;

/// Closed interval [begin, end] of 1-based positions.
struct Interval {
    position_t begin = 1;
    position_t end = 1;

    constexpr std::size_t length() const noexcept { return end - begin + 1; }

    /// True iff 1 <= begin <= end <= n.
    constexpr bool valid_for(std::size_t n) const noexcept {
        return begin >= 1 && begin <= end && end <= n;
    }

    friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    return os << '[' << iv.begin << ',' << iv.end << ']';
}

/// Reflexive containment: outer.begin <= inner.begin and inner.end <= outer.end.
constexpr bool contains(const Interval& outer, const Interval& inner) noexcept {
    return outer.begin <= inner.begin && inner.end <= outer.end;
}

/// Immutable byte string. Copies share the underlying buffer.
class Text {
public:
    explicit Text(std::string bytes) {
        if (bytes.empty()) {
            throw error(errc::empty_text, "text must contain at least one symbol");
        }
        bytes_ = std::make_shared<const std::string>(std::move(bytes));
    }

    std::size_t size() const noexcept { return bytes_->size(); }

    /// Symbol at 1-based position i (unchecked).
    unsigned char operator[](position_t i) const noexcept {
        return static_cast<unsigned char>((*bytes_)[i - 1]);
    }

    std::string_view view() const noexcept { return *bytes_; }

    bool contains_interval(const Interval& iv) const noexcept { return iv.valid_for(size()); }

    friend bool operator==(const Text& a, const Text& b) noexcept { return a.view() == b.view(); }

private:
    std::shared_ptr<const std::string> bytes_;
};

inline Text make_text(std::string_view bytes) { return Text(std::string(bytes)); }

/// Bytes at positions iv.begin..iv.end. The view borrows from text.
inline std::string_view substring(const Text& text, const Interval& iv) {
    if (!text.contains_interval(iv)) {
        throw error(errc::out_of_bounds, "interval exceeds text of length " + std::to_string(text.size()));
    }
    return text.view().substr(iv.begin - 1, iv.length());
}

/// Reads a whole file as raw bytes; one trailing '\n' is dropped.
inline Text read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw error(errc::io_error, "cannot open '" + path + "'");
    }
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw error(errc::io_error, "failed reading '" + path + "'");
    }
    if (!bytes.empty() && bytes.back() == '\n') {
        bytes.pop_back();
    }
    return Text(std::move(bytes));
}

} // namespace sus

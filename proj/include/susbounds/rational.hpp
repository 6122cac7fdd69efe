// Copyright 2026 The susbounds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace sus {

/// Exact p/q with q > 0, kept in lowest terms.
class Rational {
public:
    constexpr Rational(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    constexpr std::int64_t num() const noexcept { return num_; }
    constexpr std::int64_t den() const noexcept { return den_; }
    constexpr bool is_integer() const noexcept { return den_ == 1; }

    /// Smallest integer >= this.
    constexpr std::int64_t ceil() const noexcept {
        return num_ >= 0 ? (num_ + den_ - 1) / den_ : -((-num_) / den_);
    }

    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend constexpr Rational operator+(Rational a, Rational b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend constexpr Rational operator-(Rational a, Rational b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend constexpr Rational operator*(Rational a, Rational b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
    friend constexpr Rational operator/(Rational a, Rational b) { return {a.num_ * b.den_, a.den_ * b.num_}; }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;
    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

private:
    std::int64_t num_;
    std::int64_t den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

/// Parses "p" or "p/q"; nullopt on malformed input or q == 0.
inline std::optional<Rational> parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view part) -> std::optional<std::int64_t> {
        std::int64_t v = 0;
        const auto* last = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(part.data(), last, v);
        if (part.empty() || ec != std::errc() || ptr != last) {
            return std::nullopt;
        }
        return v;
    };
    const auto slash = text.find('/');
    const auto num = parse_int(text.substr(0, slash));
    if (!num) {
        return std::nullopt;
    }
    if (slash == std::string_view::npos) {
        return Rational(*num);
    }
    const auto den = parse_int(text.substr(slash + 1));
    if (!den || *den == 0) {
        return std::nullopt;
    }
    return Rational(*num, *den);
}

} // namespace sus

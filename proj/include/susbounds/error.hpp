// Copyright 2026 The susbounds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace sus {

enum class errc {
    empty_text,
    out_of_bounds,
    position_out_of_range,
    interval_out_of_range,
    alphabet_too_small,
    param_out_of_range,
    budget_exceeded,
    io_error,
};

inline const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::empty_text: return "EmptyText";
        case errc::out_of_bounds: return "OutOfBounds";
        case errc::position_out_of_range: return "PositionOutOfRange";
        case errc::interval_out_of_range: return "IntervalOutOfRange";
        case errc::alphabet_too_small: return "AlphabetTooSmall";
        case errc::param_out_of_range: return "ParamOutOfRange";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::io_error: return "IoError";
    }
    return "Unknown";
}

/// Single exception type for the library; inspect code() to branch.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace sus

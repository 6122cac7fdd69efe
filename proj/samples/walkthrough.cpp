// Copyright 2026 The susbounds Authors
// SPDX-License-Identifier: Apache-2.0

// Walk through the library on a short text: MUSs, queries, the point SUS
// decomposition and the bound report.

#include <iostream>

#include "susbounds/susbounds.hpp"

int main(int argc, char** argv) {
    const sus::Text text = sus::make_text(argc > 1 ? argv[1] : "aabbaababaa");
    std::cout << "text " << text.view() << " (n=" << text.size() << ")\n";

    const auto mus = sus::compute_mus(text);
    std::cout << "MUS:";
    for (const auto& m : mus) {
        std::cout << ' ' << m << '=' << sus::substring(text, m);
    }
    std::cout << '\n';

    for (std::size_t p = 1; p <= text.size(); ++p) {
        const auto a = sus::point_sus(mus, p);
        std::cout << "SUS(" << p << ") len " << a.length << ':';
        for (const auto& iv : a.sus) {
            std::cout << ' ' << iv;
        }
        std::cout << '\n';
    }

    const auto ps = sus::enumerate_point_sus(mus);
    for (std::size_t k = 0; k < ps.ps.size(); ++k) {
        std::cout << sus::kind_name(ps.kind[k]) << ' ' << ps.ps[k] << '\n';
    }

    const auto report = sus::verify_bounds(text);
    for (const auto& c : report.checks) {
        std::cout << (c.pass ? "ok   " : "FAIL ") << c.formula << "  (" << c.lhs << " vs " << c.rhs.str() << ")\n";
    }
    return report.all_pass() ? 0 : 1;
}

// Copyright 2026 The susbounds Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: mus | query | enumerate | verify | generate.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "susbounds/susbounds.hpp"

namespace {

using json = nlohmann::ordered_json;
using sus::Interval;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr const char* kSchemaVersion = "1";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    std::optional<std::string> text;
    std::optional<std::string> file;
    bool json = false;
    unsigned jobs = 1;
    std::uint64_t seed = 42;
};

/// Printable ASCII passes through; backslash, tab, newline and every other
/// byte become escapes so TSV columns and JSON strings stay well formed.
std::string escape_bytes(std::string_view bytes) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (const char ch : bytes) {
        const auto c = static_cast<unsigned char>(ch);
        if (c == '\\') {
            out += "\\\\";
        } else if (c >= 0x20 && c < 0x7f) {
            out.push_back(ch);
        } else {
            out += "\\x";
            out.push_back(kHex[c >> 4]);
            out.push_back(kHex[c & 0xf]);
        }
    }
    return out;
}

std::int64_t parse_int(const std::string& s, const char* what) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw UsageError(std::string("invalid ") + what + ": '" + s + "'");
    }
    return v;
}

std::size_t parse_count(const std::string& s, const char* what) {
    const auto v = parse_int(s, what);
    if (v < 0) {
        throw UsageError(std::string(what) + " must be non-negative");
    }
    return static_cast<std::size_t>(v);
}

sus::Text load_input(const GlobalOptions& g) {
    if (g.text) {
        return sus::make_text(*g.text);
    }
    if (g.file) {
        return sus::read_text_file(*g.file);
    }
    throw UsageError("an input is required: --string <s> or --file <path>");
}

json input_echo(const GlobalOptions& g) {
    json j;
    if (g.text) {
        j["string"] = escape_bytes(*g.text);
    } else if (g.file) {
        j["file"] = *g.file;
    }
    return j;
}

json envelope(const std::string& command, json params, json result) {
    json j;
    j["schemaVersion"] = kSchemaVersion;
    j["command"] = command;
    j["params"] = std::move(params);
    j["result"] = std::move(result);
    return j;
}

json interval_json(const Interval& iv) { return json{{"begin", iv.begin}, {"end", iv.end}}; }

json interval_json(const sus::Text& text, const Interval& iv) {
    return json{{"begin", iv.begin}, {"end", iv.end}, {"substring", escape_bytes(sus::substring(text, iv))}};
}

json intervals_json(const std::vector<Interval>& v) {
    json arr = json::array();
    for (const auto& iv : v) {
        arr.push_back(interval_json(iv));
    }
    return arr;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- mus

int run_mus(const GlobalOptions& g) {
    const auto text = load_input(g);
    const auto mus = sus::compute_mus(text);
    if (g.json) {
        json items = json::array();
        for (const auto& m : mus) {
            items.push_back(interval_json(text, m));
        }
        emit(envelope("mus", input_echo(g), json{{"n", text.size()}, {"m", mus.size()}, {"mus", items}}));
        return kExitOk;
    }
    for (const auto& m : mus) {
        std::cout << m.begin << '\t' << m.end << '\t' << escape_bytes(sus::substring(text, m)) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- query

struct QueryOptions {
    std::optional<std::int64_t> point;
    std::optional<std::string> interval;
};

Interval parse_interval(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
        throw UsageError("interval must be s:t, got '" + s + "'");
    }
    const auto b = parse_int(s.substr(0, colon), "interval begin");
    const auto e = parse_int(s.substr(colon + 1), "interval end");
    if (b < 1 || e < 1) {
        throw UsageError("interval positions are 1-based");
    }
    return {static_cast<std::size_t>(b), static_cast<std::size_t>(e)};
}

int run_query(const GlobalOptions& g, const QueryOptions& q) {
    if (q.point.has_value() == q.interval.has_value()) {
        throw UsageError("query needs exactly one of --point or --interval");
    }
    const auto text = load_input(g);
    const auto mus = sus::compute_mus(text);
    sus::SusAnswer answer;
    json params = input_echo(g);
    if (q.point) {
        if (*q.point < 1) {
            throw sus::error(sus::errc::position_out_of_range, "position " + std::to_string(*q.point));
        }
        answer = sus::point_sus(mus, static_cast<std::size_t>(*q.point));
        params["point"] = *q.point;
    } else {
        answer = sus::interval_sus(mus, parse_interval(*q.interval));
        params["interval"] = interval_json(answer.query);
    }
    if (g.json) {
        json list = json::array();
        for (const auto& iv : answer.sus) {
            list.push_back(interval_json(text, iv));
        }
        emit(envelope("query", params,
                      json{{"query", interval_json(answer.query)}, {"susLength", answer.length}, {"sus", list}}));
        return kExitOk;
    }
    for (const auto& iv : answer.sus) {
        std::cout << iv.begin << '\t' << iv.end << '\t' << answer.length << '\t'
                  << escape_bytes(sus::substring(text, iv)) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateOptions {
    bool point = false;
    bool interval = false;
    bool decompose = false;
    bool charging = false;
};

int run_enumerate(const GlobalOptions& g, const EnumerateOptions& o) {
    if (o.point && o.interval) {
        throw UsageError("enumerate takes --point or --interval, not both");
    }
    const auto text = load_input(g);
    const auto mus = sus::compute_mus(text);
    json params = input_echo(g);
    params["mode"] = o.interval ? "interval" : "point";
    params["decompose"] = o.decompose;
    params["charging"] = o.charging;

    if (o.interval) {
        const auto is = sus::enumerate_interval_sus(mus);
        if (g.json) {
            json result{{"n", text.size()}, {"m", mus.size()}, {"isCount", is.size()}};
            if (o.decompose) {
                result["is"] = intervals_json(is);
            }
            emit(envelope("enumerate", params, result));
            return kExitOk;
        }
        std::cout << "count\tn\t" << text.size() << "\t-\n";
        std::cout << "count\tm\t" << mus.size() << "\t-\n";
        std::cout << "count\tisCount\t" << is.size() << "\t-\n";
        if (o.decompose) {
            for (const auto& iv : is) {
                std::cout << "interval\tIS\t" << iv.begin << '\t' << iv.end << '\n';
            }
        }
        return kExitOk;
    }

    const auto ps = sus::enumerate_point_sus(mus);
    const auto ch = sus::build_charging(ps);
    if (g.json) {
        json result{{"n", text.size()},
                    {"m", mus.size()},
                    {"psCount", ps.ps.size()},
                    {"lsCount", ps.ls.size()},
                    {"msCount", ps.ms.size()},
                    {"rsCount", ps.rs.size()},
                    {"uCount", ch.doubly_charged.size()}};
        if (o.decompose) {
            result["ps"] = intervals_json(ps.ps);
            result["ls"] = intervals_json(ps.ls);
            result["ms"] = intervals_json(ps.ms);
            result["rs"] = intervals_json(ps.rs);
        }
        if (o.charging) {
            json f = json::array();
            for (const auto& [iv, u] : ch.f) {
                f.push_back(json{{"begin", iv.begin}, {"end", iv.end}, {"u", u}});
            }
            json finv = json::array();
            for (std::size_t u = 1; u <= text.size(); ++u) {
                finv.push_back(json{{"u", u}, {"intervals", intervals_json(ch.inverse(u))}});
            }
            result["f"] = f;
            result["finv"] = finv;
            result["U"] = ch.doubly_charged;
        }
        emit(envelope("enumerate", params, result));
        return kExitOk;
    }
    std::cout << "count\tn\t" << text.size() << "\t-\n";
    std::cout << "count\tm\t" << mus.size() << "\t-\n";
    std::cout << "count\tpsCount\t" << ps.ps.size() << "\t-\n";
    std::cout << "count\tlsCount\t" << ps.ls.size() << "\t-\n";
    std::cout << "count\tmsCount\t" << ps.ms.size() << "\t-\n";
    std::cout << "count\trsCount\t" << ps.rs.size() << "\t-\n";
    std::cout << "count\tuCount\t" << ch.doubly_charged.size() << "\t-\n";
    if (o.decompose) {
        for (std::size_t k = 0; k < ps.ps.size(); ++k) {
            std::cout << "interval\t" << sus::kind_name(ps.kind[k]) << '\t' << ps.ps[k].begin << '\t'
                      << ps.ps[k].end << '\n';
        }
    }
    if (o.charging) {
        for (const auto& [iv, u] : ch.f) {
            std::cout << "f\t" << u << '\t' << iv.begin << '\t' << iv.end << '\n';
        }
        for (std::size_t u = 1; u <= text.size(); ++u) {
            const auto& pre = ch.inverse(u);
            if (pre.empty()) {
                std::cout << "finv\t" << u << "\t-\t-\n";
            }
            for (const auto& iv : pre) {
                std::cout << "finv\t" << u << '\t' << iv.begin << '\t' << iv.end << '\n';
            }
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
    std::vector<std::string> exhaustive;
    std::vector<std::string> random;
    std::size_t budget = 5'000'000;
    std::size_t oracle_max_n = 300;
};

json findings_json(const std::vector<sus::oracle::Finding>& v) {
    json arr = json::array();
    for (const auto& f : v) {
        arr.push_back(json{{"text", escape_bytes(f.text)}, {"detail", f.what}});
    }
    return arr;
}

void print_findings(const char* kind, const std::vector<sus::oracle::Finding>& v) {
    for (const auto& f : v) {
        std::cout << kind << '\t' << escape_bytes(f.text) << '\t' << f.what << '\n';
    }
}

json check_json(const sus::BoundCheck& c) {
    return json{{"id", c.id},       {"formula", c.formula}, {"relation", c.relation}, {"lhs", c.lhs},
                {"rhs", c.rhs.str()}, {"pass", c.pass},       {"tight", c.tight()}};
}

int run_verify_exhaustive(const GlobalOptions& g, const VerifyOptions& o) {
    const auto n_max = parse_count(o.exhaustive[0], "nMax");
    const auto sigma = parse_count(o.exhaustive[1], "sigma");
    sus::oracle::SweepOptions opts;
    opts.budget = o.budget;
    opts.jobs = g.jobs;
    const auto results = sus::oracle::sweep(n_max, sigma, opts);

    std::size_t strings = 0, violations = 0, mismatches = 0;
    for (const auto& r : results) {
        strings += r.strings;
        violations += r.violations.size();
        mismatches += r.mismatches.size();
    }
    const bool ok = violations == 0 && mismatches == 0;
    if (g.json) {
        json rows = json::array();
        for (const auto& r : results) {
            auto witnesses = [](const std::vector<sus::oracle::Witness>& ws) {
                json arr = json::array();
                for (const auto& w : ws) {
                    arr.push_back(json{{"text", w.text}, {"m", w.m}, {"psCount", w.ps}, {"isCount", w.is}});
                }
                return arr;
            };
            rows.push_back(json{{"n", r.n},
                                {"sigma", r.sigma},
                                {"strings", r.strings},
                                {"maxPs", r.max_ps},
                                {"maxIs", r.max_is},
                                {"psWitnessCount", r.ps_witness_count},
                                {"isWitnessCount", r.is_witness_count},
                                {"psWitnesses", witnesses(r.ps_witnesses)},
                                {"isWitnesses", witnesses(r.is_witnesses)},
                                {"violations", findings_json(r.violations)},
                                {"mismatches", findings_json(r.mismatches)}});
        }
        json params{{"mode", "exhaustive"}, {"nMax", n_max}, {"sigma", sigma}, {"jobs", g.jobs}};
        emit(envelope("verify", params,
                      json{{"strings", strings},
                           {"violations", violations},
                           {"mismatches", mismatches},
                           {"pass", ok},
                           {"sweep", rows}}));
    } else {
        for (const auto& r : results) {
            std::cout << "sweep\t" << r.n << '\t' << r.sigma << '\t' << r.strings << '\t' << r.max_ps << '\t'
                      << r.max_is << '\t' << r.violations.size() << '\t' << r.mismatches.size() << '\n';
        }
        for (const auto& r : results) {
            for (const auto& w : r.ps_witnesses) {
                std::cout << "witness\t" << r.n << "\tps\t" << w.text << '\t' << w.m << '\t' << w.ps << '\t' << w.is
                          << '\n';
            }
            for (const auto& w : r.is_witnesses) {
                std::cout << "witness\t" << r.n << "\tis\t" << w.text << '\t' << w.m << '\t' << w.ps << '\t' << w.is
                          << '\n';
            }
            print_findings("violation", r.violations);
            print_findings("mismatch", r.mismatches);
        }
        std::cout << "summary\t" << strings << '\t' << violations << '\t' << mismatches << '\n';
    }
    return ok ? kExitOk : kExitFailed;
}

int run_verify_random(const GlobalOptions& g, const VerifyOptions& o) {
    const auto count = parse_count(o.random[0], "count");
    const auto max_len = parse_count(o.random[1], "maxLen");
    const auto sigma = parse_count(o.random[2], "sigma");
    const std::uint64_t seed = o.random.size() > 3 ? parse_count(o.random[3], "seed") : g.seed;
    const auto r = sus::oracle::random_run(count, max_len, {sigma}, seed, g.jobs);
    const bool ok = r.violations.empty() && r.mismatches.empty();
    if (g.json) {
        json params{{"mode", "random"}, {"count", count}, {"maxLen", max_len}, {"sigma", sigma}, {"seed", seed}};
        emit(envelope("verify", params,
                      json{{"strings", r.strings},
                           {"violations", findings_json(r.violations)},
                           {"mismatches", findings_json(r.mismatches)},
                           {"pass", ok}}));
    } else {
        std::cout << "random\t" << r.strings << '\t' << seed << '\t' << r.violations.size() << '\t'
                  << r.mismatches.size() << '\n';
        print_findings("violation", r.violations);
        print_findings("mismatch", r.mismatches);
    }
    return ok ? kExitOk : kExitFailed;
}

int run_verify_text(const GlobalOptions& g, const VerifyOptions& o) {
    const auto text = load_input(g);
    const auto analysis = sus::analyze(text);
    const auto report = sus::evaluate_bounds(analysis);
    std::vector<std::string> mismatches;
    const bool oracle_ran = text.size() <= o.oracle_max_n;
    if (oracle_ran) {
        mismatches = sus::oracle::compare_with_oracle(text, analysis);
    }
    const bool ok = report.all_pass() && mismatches.empty();
    const auto* tight = report.find("ps_le_3n_minus_1_half");
    if (g.json) {
        json checks = json::array();
        for (const auto& c : report.checks) {
            checks.push_back(check_json(c));
        }
        json params = input_echo(g);
        params["mode"] = "text";
        emit(envelope("verify", params,
                      json{{"n", report.n},
                           {"m", report.m},
                           {"psCount", report.ps_count},
                           {"isCount", report.is_count.value_or(0)},
                           {"lsCount", report.ls_count},
                           {"msCount", report.ms_count},
                           {"rsCount", report.rs_count},
                           {"uCount", report.u_count},
                           {"pointBound", tight->rhs.str()},
                           {"tight", tight->tight()},
                           {"checks", checks},
                           {"oracleCompared", oracle_ran},
                           {"mismatches", mismatches},
                           {"pass", ok}}));
        return ok ? kExitOk : kExitFailed;
    }
    std::cout << "count\tn\t" << report.n << '\n';
    std::cout << "count\tm\t" << report.m << '\n';
    std::cout << "count\tpsCount\t" << report.ps_count << '\n';
    std::cout << "count\tisCount\t" << report.is_count.value_or(0) << '\n';
    std::cout << "count\tlsCount\t" << report.ls_count << '\n';
    std::cout << "count\tmsCount\t" << report.ms_count << '\n';
    std::cout << "count\trsCount\t" << report.rs_count << '\n';
    std::cout << "count\tuCount\t" << report.u_count << '\n';
    for (const auto& c : report.checks) {
        std::cout << "check\t" << c.id << '\t' << c.lhs << '\t' << c.relation << '\t' << c.rhs.str() << '\t'
                  << (!c.pass ? "FAIL" : c.tight() ? "tight" : "pass") << '\n';
    }
    for (const auto& m : mismatches) {
        std::cout << "mismatch\t" << escape_bytes(text.view()) << '\t' << m << '\n';
    }
    return ok ? kExitOk : kExitFailed;
}

int run_verify(const GlobalOptions& g, const VerifyOptions& o) {
    const int modes = !o.exhaustive.empty() + !o.random.empty() + (g.text || g.file);
    if (modes != 1) {
        throw UsageError("verify needs exactly one of --exhaustive, --random or an input");
    }
    if (!o.exhaustive.empty()) {
        return run_verify_exhaustive(g, o);
    }
    if (!o.random.empty()) {
        return run_verify_random(g, o);
    }
    return run_verify_text(g, o);
}

// ---------------------------------------------------------------- generate

struct GenerateOptions {
    std::string family;
    std::vector<std::string> params;
    bool check = false;
};

sus::ExtremalSpec make_spec(const GenerateOptions& o) {
    auto need = [&](std::size_t count, const char* usage) {
        if (o.params.size() != count) {
            throw UsageError(std::string("usage: generate ") + usage);
        }
    };
    if (o.family == "point-tight") {
        need(1, "point-tight <k>");
        return sus::gen_point_tight(parse_int(o.params[0], "k"));
    }
    if (o.family == "sigma-family") {
        need(2, "sigma-family <n> <sigma>");
        return sus::gen_sigma_family(parse_int(o.params[0], "n"), parse_int(o.params[1], "sigma"));
    }
    if (o.family == "interval-family") {
        need(1, "interval-family <p/q>");
        const auto eps = sus::parse_rational(o.params[0]);
        if (!eps) {
            throw UsageError("eps must be p or p/q, got '" + o.params[0] + "'");
        }
        return sus::gen_interval_family(*eps);
    }
    throw UsageError("unknown family '" + o.family + "' (point-tight | sigma-family | interval-family)");
}

int run_generate(const GlobalOptions& g, const GenerateOptions& o) {
    const auto spec = make_spec(o);
    std::optional<sus::ExtremalMeasurement> measured;
    if (o.check) {
        measured = sus::measure(spec);
    }
    const bool interval = spec.family == sus::Family::interval_family;
    const bool ok = !measured || measured->match();
    if (g.json) {
        json result{{"text", escape_bytes(spec.text.view())},
                    {"n", spec.text.size()},
                    {"counts", interval ? "IS" : "PS"},
                    {"predictedCount", spec.predicted_count}};
        if (spec.predicted_mus_count) {
            result["predictedMusCount"] = *spec.predicted_mus_count;
        }
        if (interval) {
            result["eps"] = spec.eps->str();
            result["x"] = *spec.filler_run;
            result["gap"] = spec.gap->str();
            result["gapWithin5Eps"] = spec.gap_within_5eps;
            result["countExceedsLinear"] = spec.count_exceeds_linear;
        }
        if (measured) {
            result["measuredCount"] = measured->count;
            result["measuredMusCount"] = measured->mus_count;
            result["match"] = measured->match();
        }
        emit(envelope("generate", json{{"family", sus::family_name(spec.family)}, {"params", spec.params}},
                      result));
        return ok ? kExitOk : kExitFailed;
    }
    std::cout << "text\t" << escape_bytes(spec.text.view()) << '\n';
    std::cout << "family\t" << sus::family_name(spec.family) << '\n';
    std::cout << "params\t" << spec.params << '\n';
    std::cout << "n\t" << spec.text.size() << '\n';
    std::cout << "counts\t" << (interval ? "IS" : "PS") << '\n';
    std::cout << "predictedCount\t" << spec.predicted_count << '\n';
    if (spec.predicted_mus_count) {
        std::cout << "predictedMusCount\t" << *spec.predicted_mus_count << '\n';
    }
    if (interval) {
        std::cout << "x\t" << *spec.filler_run << '\n';
        std::cout << "gap\t" << spec.gap->str() << '\n';
        std::cout << "gapWithin5Eps\t" << (spec.gap_within_5eps ? "true" : "false") << '\n';
        std::cout << "countExceedsLinear\t" << (spec.count_exceeds_linear ? "true" : "false") << '\n';
    }
    if (measured) {
        std::cout << "measuredCount\t" << measured->count << '\n';
        std::cout << "measuredMusCount\t" << measured->mus_count << '\n';
        std::cout << "match\t" << (measured->match() ? "true" : "false") << '\n';
    }
    return ok ? kExitOk : kExitFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal and shortest unique substrings: queries, enumeration and bound checks"};
    app.require_subcommand(1);

    GlobalOptions g;
    auto* opt_string = app.add_option("--string", g.text, "Input text given inline");
    auto* opt_file = app.add_option("--file", g.file, "Input text read from a file (one trailing newline dropped)");
    opt_string->excludes(opt_file);
    app.add_flag("--json", g.json, "Emit a single JSON document instead of TSV");
    app.add_option("--jobs", g.jobs, "Worker threads for verify sweeps")->check(CLI::Range(1u, 1024u));
    app.add_option("--seed", g.seed, "Seed for randomized verification");

    auto* mus_cmd = app.add_subcommand("mus", "List all minimal unique substrings");

    QueryOptions qo;
    auto* query_cmd = app.add_subcommand("query", "Shortest unique substrings for one query");
    query_cmd->add_option("--point", qo.point, "1-based query position");
    query_cmd->add_option("--interval", qo.interval, "1-based query interval s:t");

    EnumerateOptions eo;
    auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate all point SUSs (default) or interval SUSs");
    enum_cmd->add_flag("--point", eo.point, "Point SUSs and their LS/MS/RS decomposition");
    enum_cmd->add_flag("--interval", eo.interval, "Non-trivial interval SUSs");
    enum_cmd->add_flag("--decompose", eo.decompose, "List the sets, not just their sizes");
    enum_cmd->add_flag("--charging", eo.charging, "Print the charging function and its inverse image");

    VerifyOptions vo;
    auto* verify_cmd = app.add_subcommand("verify", "Check every bound against a text, a sweep or random strings");
    verify_cmd->add_option("--exhaustive", vo.exhaustive, "nMax sigma")->expected(2);
    verify_cmd->add_option("--random", vo.random, "count maxLen sigma [seed]")->expected(3, 4);
    verify_cmd->add_option("--budget", vo.budget, "Maximum canonical strings for --exhaustive");
    verify_cmd->add_option("--oracle-max-n", vo.oracle_max_n, "Skip oracle comparison for longer inputs");

    GenerateOptions go;
    auto* gen_cmd = app.add_subcommand("generate", "Generate an extremal string and its predicted counts");
    gen_cmd->add_option("family", go.family, "point-tight | sigma-family | interval-family")->required();
    gen_cmd->add_option("params", go.params, "k | n sigma | p/q");
    gen_cmd->add_flag("--check", go.check, "Measure the generated string and compare");

    for (auto* sub : {mus_cmd, query_cmd, enum_cmd, verify_cmd, gen_cmd}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*mus_cmd) {
            return run_mus(g);
        }
        if (*query_cmd) {
            return run_query(g, qo);
        }
        if (*enum_cmd) {
            return run_enumerate(g, eo);
        }
        if (*verify_cmd) {
            return run_verify(g, vo);
        }
        if (*gen_cmd) {
            return run_generate(g, go);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const sus::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

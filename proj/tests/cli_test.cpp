// Copyright 2026 The susbounds Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

using nlohmann::json;

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(SUSBOUNDS_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, got);
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json run_json(const std::string& args, int expect_code = 0) {
    const auto r = run(args);
    EXPECT_EQ(r.code, expect_code) << args;
    auto j = json::parse(r.out, nullptr, false);
    EXPECT_FALSE(j.is_discarded()) << r.out;
    EXPECT_EQ(j.value("schemaVersion", ""), "1");
    return j;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

TEST(Cli, MusTsv) {
    const auto r = run("--string aabbaababaa mus");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(first_line(r.out), "3\t4\tbb");
}

TEST(Cli, MusJsonEchoesInput) {
    const auto j = run_json("mus --string axbxc --json");
    EXPECT_EQ(j["params"]["string"], "axbxc");
    EXPECT_EQ(j["result"]["m"], 3);
    EXPECT_EQ(j["result"]["mus"][1]["substring"], "b");
}

TEST(Cli, QueryPoint) {
    const auto j = run_json("--string aabbaababaa --json query --point 10");
    EXPECT_EQ(j["result"]["susLength"], 4);
    ASSERT_EQ(j["result"]["sus"].size(), 2u);
    EXPECT_EQ(j["result"]["sus"][0]["begin"], 7);
    EXPECT_EQ(j["result"]["sus"][1]["begin"], 8);
}

TEST(Cli, QueryInterval) {
    const auto r = run("--string baacaad query --interval 2:2");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\t2\t2\tba\n");
}

TEST(Cli, UsageAndIoErrors) {
    EXPECT_EQ(run("--string abc query --point 99").code, 2);
    EXPECT_EQ(run("--string abc query --point 0").code, 2);
    EXPECT_EQ(run("--string abc query --interval 3:1").code, 2);
    EXPECT_EQ(run("--string abc query").code, 2);
    EXPECT_EQ(run("--file /nonexistent/input.txt mus").code, 2);
    EXPECT_EQ(run("--string abc --file x mus").code, 2);
    EXPECT_EQ(run("mus").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("generate point-tight 2").code, 2);
    EXPECT_EQ(run("generate interval-family zero").code, 2);
    EXPECT_EQ(run("verify --exhaustive 30 3").code, 2); // budget
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, EnumeratePointDecomposition) {
    const auto j = run_json("--string aabbaababaa --json enumerate --decompose --charging");
    const auto& r = j["result"];
    EXPECT_EQ(r["psCount"], 11);
    EXPECT_EQ(r["lsCount"].get<int>() + r["msCount"].get<int>() + r["rsCount"].get<int>(), 11);
    EXPECT_EQ(r["ps"].size(), 11u);
    EXPECT_EQ(r["f"].size(), 11u);
    EXPECT_EQ(r["finv"].size(), 11u);
    EXPECT_EQ(r["U"].size(), r["uCount"].get<std::size_t>());
    EXPECT_EQ(r["finv"][5]["u"], 6);
    EXPECT_EQ(r["finv"][5]["intervals"].size(), 2u);
}

TEST(Cli, EnumerateTsvRowsHaveFourColumns) {
    const auto r = run("--string aabbaababaa enumerate --decompose --charging");
    ASSERT_EQ(r.code, 0);
    std::size_t start = 0;
    while (start < r.out.size()) {
        const auto end = r.out.find('\n', start);
        const auto line = r.out.substr(start, end - start);
        EXPECT_EQ(std::count(line.begin(), line.end(), '\t'), 3) << line;
        start = end + 1;
    }
}

TEST(Cli, EnumerateInterval) {
    const auto j = run_json("--string baacaad --json enumerate --interval --decompose");
    EXPECT_EQ(j["result"]["isCount"], 11);
    EXPECT_EQ(j["result"]["is"].size(), 11u);
}

TEST(Cli, VerifyText) {
    const auto j = run_json("--string axbxc --json verify");
    EXPECT_EQ(j["result"]["psCount"], 7);
    EXPECT_EQ(j["result"]["tight"], true);
    EXPECT_EQ(j["result"]["pass"], true);
    EXPECT_EQ(j["result"]["mismatches"].size(), 0u);
}

TEST(Cli, VerifyExhaustive) {
    const auto j = run_json("--json --jobs 2 verify --exhaustive 5 3");
    EXPECT_EQ(j["result"]["pass"], true);
    const auto& last = j["result"]["sweep"].back();
    EXPECT_EQ(last["n"], 5);
    EXPECT_EQ(last["strings"], 41);
    EXPECT_EQ(last["maxPs"], 7);
    EXPECT_EQ(last["psWitnesses"][0]["text"], "abbbc");
}

TEST(Cli, VerifyRandomIsSeeded) {
    const auto a = run("verify --random 50 30 3 7");
    const auto b = run("--seed 7 verify --random 50 30 3");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(first_line(a.out), "random\t50\t7\t0\t0");
}

TEST(Cli, GenerateFamilies) {
    auto j = run_json("--json generate point-tight 3 --check");
    EXPECT_EQ(j["result"]["text"], "axbxc");
    EXPECT_EQ(j["result"]["match"], true);

    j = run_json("--json generate sigma-family 10 3 --check");
    EXPECT_EQ(j["result"]["predictedCount"], 11);
    EXPECT_EQ(j["result"]["match"], true);

    j = run_json("--json generate interval-family 1/2 --check");
    EXPECT_EQ(j["result"]["x"], 3);
    EXPECT_EQ(j["result"]["text"], "baaacaaad");
    EXPECT_EQ(j["result"]["predictedCount"], 15);
    EXPECT_EQ(j["result"]["match"], true);
    EXPECT_EQ(j["result"]["countExceedsLinear"], true);
}

TEST(Cli, EscapesNonPrintableBytes) {
    const std::string path = ::testing::TempDir() + "cli_escape.txt";
    {
        std::ofstream f(path, std::ios::binary);
        f << "a\tb\\a\n";
    }
    const auto r = run("--file " + path + " mus");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\\x09"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("\\\\"), std::string::npos) << r.out;
}

} // namespace

// Copyright 2026 The cohmzi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cohmzi/cli.h"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "netlist_corpus.h"
#include "oracles.h"

using namespace cohmzi;
using oracle::kPi;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string &name, const std::string &contents) {
    const auto path = std::filesystem::temp_directory_path() / ("cohmzi_cli_test_" + name);
    std::ofstream(path, std::ios::binary) << contents;
    return path;
}

std::vector<std::vector<double>> csv_rows(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            row.push_back(std::stod(cell));
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST(cli_sweep, static_fringe) {
    const Result r = run_cli({"sweep", "--zeta", "0:4pi", "--steps", "401", "--dphi", "0", "--i0", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 401u);
    EXPECT_EQ(rows.front()[0], 0.0);
    EXPECT_EQ(rows.back()[0], 4 * kPi);
    for (const auto &row : rows) {
        ASSERT_NEAR(row[1], (1 - std::cos(row[0])) / 2, 1e-12);
    }
}

TEST(cli_sweep, swapped_fringe) {
    const auto plain = csv_rows(run_cli({"sweep", "--zeta", "0:4pi", "--steps", "401", "--dphi", "0"}).out);
    const auto swapped = csv_rows(run_cli({"sweep", "--zeta", "0:4pi", "--steps", "401", "--dphi", "pi"}).out);
    ASSERT_EQ(plain.size(), swapped.size());
    for (std::size_t i = 0; i < plain.size(); ++i) {
        ASSERT_NEAR(plain[i][1], swapped[i][2], 1e-12);
        ASSERT_NEAR(plain[i][2], swapped[i][1], 1e-12);
    }
}

TEST(cli_sweep, pulse_mode) {
    const Result r = run_cli({"sweep", "--zeta", "0:4pi", "--steps", "401", "--pulse",
                              "period=1e-3,duty=0.5,n=10,spp=20", "--dphi-on", "pi"});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const auto &row : csv_rows(r.out)) {
        ASSERT_NEAR(row[1], 0.5, 1e-12);
        ASSERT_NEAR(row[3], std::pow(std::sin(row[0]), 2), 1e-9);
    }
}

TEST(cli_sweep, pulse_drive_parameters) {
    const Result a = run_cli({"sweep", "--steps", "9", "--pulse", "period=1e-3,duty=0.5,n=2,spp=4"});
    const Result b = run_cli({"sweep", "--steps", "9", "--pulse", "period=1e-3,duty=0.5,n=2,spp=4,delta=80e6,duration=3.125e-9"});
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(b.code, 0) << b.err;
    const auto ra = csv_rows(a.out);
    const auto rb = csv_rows(b.out);
    for (std::size_t i = 0; i < ra.size(); ++i) {
        EXPECT_NEAR(ra[i][3], rb[i][3], 1e-12);
    }
}

TEST(cli_sweep, json_and_csv_match_and_out_file) {
    const auto path = std::filesystem::temp_directory_path() / "cohmzi_cli_test_sweep.json";
    std::filesystem::remove(path);
    const Result csv = run_cli({"sweep", "--steps", "33", "--dphi", "0.4"});
    const Result json = run_cli({"sweep", "--steps", "33", "--dphi", "0.4", "--format", "json", "--out", path.string()});
    ASSERT_EQ(json.code, 0) << json.err;
    EXPECT_TRUE(json.out.empty());
    std::ifstream in(path);
    const nlohmann::json j = nlohmann::json::parse(in);
    const auto rows = csv_rows(csv.out);
    ASSERT_EQ(j["records"].size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(j["records"][i]["i_a"].get<double>(), rows[i][1]);
        EXPECT_EQ(j["records"][i]["g2"].get<double>(), rows[i][3]);
    }
}

TEST(cli_sweep, deterministic_output) {
    const std::vector<std::string> args = {"sweep", "--steps", "101", "--pulse", "period=1e-3,duty=0.3,n=3,spp=10"};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(cli_sweep, jitter_seed_from_environment) {
    const std::vector<std::string> args = {"sweep", "--steps", "5", "--pulse", "period=1e-3,n=3,spp=10",
                                           "--jitter-std", "0.1"};
    ::setenv("COHMZI_SEED", "7", 1);
    const Result env7 = run_cli(args);
    ::unsetenv("COHMZI_SEED");
    auto explicit7 = args;
    explicit7.insert(explicit7.end(), {"--seed", "7"});
    auto explicit8 = args;
    explicit8.insert(explicit8.end(), {"--seed", "8"});
    ASSERT_EQ(env7.code, 0) << env7.err;
    EXPECT_EQ(env7.out, run_cli(explicit7).out);
    EXPECT_NE(env7.out, run_cli(explicit8).out);
}

TEST(cli_sweep, config_file_with_flag_precedence) {
    const auto cfg = temp_file("sweep.cfg", "# defaults\nsteps = 5\ndphi = pi\nzeta = 0:pi\n");
    Result r = run_cli({"sweep", "--config", cfg.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_NEAR(rows.front()[1], 1.0, 1e-12);
    EXPECT_EQ(rows.back()[0], kPi);

    r = run_cli({"sweep", "--config", cfg.string(), "--steps", "3", "--dphi", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_NEAR(rows.front()[1], 0.0, 1e-12);

    const auto bad = temp_file("bad.cfg", "stepz = 3\n");
    EXPECT_EQ(run_cli({"sweep", "--config", bad.string()}).code, cli::kExitUsage);
}

TEST(cli_sweep, usage_and_io_errors) {
    EXPECT_EQ(run_cli({"sweep", "--steps", "1"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"sweep", "--zeta", "pi:0"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"sweep", "--zeta", "0-4pi"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"sweep", "--dphi", "pi*2"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"sweep", "--dphi", "0", "--pulse", "n=2"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"sweep", "--pulse", "duty=0"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"sweep", "--pulse", "spp=3"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"sweep", "--pulse", "bogus=1"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"sweep", "--dphi-on", "pi"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"sweep", "--format", "xml"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"sweep", "--pulse", "duty=1,n=1,spp=2", "--dphi-on", "0"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(run_cli({"sweep", "--out", "/nonexistent-dir/x.csv"}).code, cli::kExitIo);
    EXPECT_EQ(run_cli({"sweep", "--help"}).code, cli::kExitOk);
}

TEST(cli_eval, controlled_mzi_with_zeta_override) {
    const auto path = temp_file("fig.mzi", corpus::kControlledMzi);
    const Result r = run_cli({"eval", path.string(), "--zeta", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const nlohmann::json j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["i_a"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(j["i_b"].get<double>(), 0.0, 1e-12);
    EXPECT_TRUE(j["unitary"].get<bool>());
    EXPECT_EQ(j["zeta"].get<double>(), 0.0);
    EXPECT_NEAR(j["e_a"]["arg"].get<double>(), kPi / 2, 1e-12);
}

TEST(cli_eval, double_splitter) {
    const auto path = temp_file("bsbs.mzi", "source intensity=1 freq=1\nbs\nbs\n");
    const Result r = run_cli({"eval", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const nlohmann::json j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["i_a"].get<double>(), 0.0, 1e-12);
    EXPECT_NEAR(j["i_b"].get<double>(), 1.0, 1e-12);
    EXPECT_FALSE(j.contains("zeta"));
}

TEST(cli_eval, malformed_and_missing_files) {
    const auto path = temp_file("bad.mzi", "source intensity=1 freq=1\nbs\nphasee arm=upper value=0\n");
    const Result r = run_cli({"eval", path.string()});
    EXPECT_EQ(r.code, cli::kExitUsage);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("phasee"), std::string::npos) << r.err;
    EXPECT_EQ(run_cli({"eval", "/nonexistent/file.mzi"}).code, cli::kExitIo);
    EXPECT_EQ(run_cli({"eval"}).code, cli::kExitUsage);
}

TEST(cli_check, passes_by_default_within_budget) {
    const auto start = std::chrono::steady_clock::now();
    const Result r = run_cli({"check"});
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_EQ(r.code, cli::kExitOk) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("PASS unitarity"), std::string::npos);
    EXPECT_LT(seconds, 10.0);
}

TEST(cli_check, perturbed_splitter_fails) {
    const Result r = run_cli({"check", "--perturb-bs", "1e-6"});
    EXPECT_EQ(r.code, cli::kExitPropertyFailure);
    EXPECT_NE(r.out.find("FAIL unitarity"), std::string::npos) << r.out;
}

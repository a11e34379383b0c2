// Copyright 2026 The qmeasure Authors
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

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    json report() const {
        return json::parse(out);
    }
};

// Runs the CLI with stderr discarded; env is prepended verbatim, e.g. "VAR=1".
RunResult run(const std::string &args, const std::string &env = "") {
    std::string cmd = env + " " QMEASURE_CLI_PATH " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed");
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string temp_path(const std::string &name) {
    return ::testing::TempDir() + "qmeasure_cli_" + name;
}

}  // namespace

TEST(cli, help_and_usage) {
    EXPECT_EQ(run("--help").exit_code, 0);
    EXPECT_EQ(run("").exit_code, 1);
    EXPECT_EQ(run("frobnicate").exit_code, 1);
    EXPECT_EQ(run("decompose --preset csm --lambda nope").exit_code, 1);
}

TEST(cli, report_envelope) {
    RunResult r = run("decompose --preset csm --lambda 2");
    ASSERT_EQ(r.exit_code, 0);
    json j = r.report();
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["tool"], "qmeasure");
    EXPECT_EQ(j["command"], "decompose");
    EXPECT_EQ(j["argv"].size(), 5u);
    EXPECT_TRUE(j["timestamp"].get<std::string>().ends_with("Z"));
    for (auto family : {"von-neumann", "two-mode", "single-mode", "hamiltonian"}) {
        EXPECT_EQ(j["results"][family]["status"], "ok") << family;
        EXPECT_LT(j["residuals"][family].get<double>(), 1e-9) << family;
    }
}

TEST(cli, decompose_explicit_transform) {
    json j = run("decompose --abcd 1,0,-1,1 --family von-neumann").report();
    const json &v = j["results"]["von-neumann"];
    EXPECT_DOUBLE_EQ(v["alpha"].get<double>(), 0.0);
    EXPECT_DOUBLE_EQ(v["beta"].get<double>(), 0.0);
    EXPECT_DOUBLE_EQ(v["gamma"].get<double>(), 1.0);
    EXPECT_EQ(v["sequence"].size(), 3u);
}

TEST(cli, decompose_failure_modes) {
    EXPECT_EQ(run("decompose --abcd 2,0,0,0.5 --family von-neumann").exit_code, 2);
    RunResult all = run("decompose --abcd 2,0,0,0.5");
    ASSERT_EQ(all.exit_code, 0);
    json j = all.report();
    EXPECT_EQ(j["results"]["von-neumann"]["status"], "skipped");
    EXPECT_TRUE(j["residuals"]["von-neumann"].is_null());
    EXPECT_EQ(j["results"]["two-mode"]["status"], "ok");
    EXPECT_EQ(run("decompose --abcd 1,1,1,1").exit_code, 1);
    EXPECT_EQ(run("decompose --abcd 1,0,0,-1 --family hamiltonian").exit_code, 2);
    EXPECT_EQ(run("decompose --abcd 1,2,3").exit_code, 1);
    EXPECT_EQ(run("decompose --preset vnm --lambda -1").exit_code, 1);
}

TEST(cli, verify_suites) {
    RunResult r = run("verify --suite ozawa");
    ASSERT_EQ(r.exit_code, 0);
    json j = r.report();
    EXPECT_TRUE(j["results"]["all_pass"].get<bool>());
    for (const auto &c : j["results"]["checks"]) {
        EXPECT_LE(c["residual"].get<double>(), c["tolerance"].get<double>()) << c["name"];
    }
    EXPECT_EQ(run("verify --suite qubit-hamiltonians").exit_code, 0);
    EXPECT_EQ(run("verify --suite nonsense").exit_code, 1);
}

TEST(cli, simulate_writes_json_and_csv) {
    std::string out = temp_path("sim.json");
    std::remove(out.c_str());
    RunResult r = run("simulate --preset csm --lambda 2 --grid-points 128 --out " + out);
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_TRUE(r.out.empty());
    json j = json::parse(read_file(out));
    EXPECT_EQ(j["inputs"]["grid_points"], 128);
    EXPECT_LT(j["residuals"]["l1_closed_form"].get<double>(), 1e-3);
    std::string csv = read_file(temp_path("sim.csv"));
    EXPECT_EQ(csv.rfind("coordinate,density\r\n", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), std::count(csv.begin(), csv.end(), '\r'));
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 129);
}

TEST(cli, simulate_is_deterministic) {
    auto strip = [](json j) {
        j.erase("timestamp");
        return j.dump();
    };
    std::string args = "simulate --preset vnm --lambda 1.5 --system 0.3,0.8 --grid-points 96";
    RunResult a = run(args), b = run(args);
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(strip(a.report()), strip(b.report()));
}

TEST(cli, grid_points_environment_variable) {
    json j = run("simulate --preset ssm --lambda 1", "QMEASURE_GRID_POINTS=128").report();
    EXPECT_EQ(j["inputs"]["grid_points"], 128);
    EXPECT_EQ(run("simulate --preset ssm --lambda 1", "QMEASURE_GRID_POINTS=8").exit_code, 1);
    EXPECT_EQ(run("simulate --preset ssm --lambda 1 --grid-points 8").exit_code, 1);
}

TEST(cli, scenario_two_peak) {
    json j = run("scenario two-peak --lambda 20").report();
    EXPECT_TRUE(j["results"]["scaled"]["resolved"].get<bool>());
    EXPECT_FALSE(j["results"]["unit"]["resolved"].get<bool>());
}

TEST(cli, scenario_repeated) {
    EXPECT_EQ(run("scenario repeated --scheme ssm").exit_code, 1);
    EXPECT_EQ(run("scenario repeated --scheme ssm --seed 7 --rounds 1").exit_code, 1);
    RunResult r = run("scenario repeated --scheme ssm --seed 7 --rounds 4");
    ASSERT_EQ(r.exit_code, 0);
    json j = r.report();
    EXPECT_EQ(j["results"]["rounds"].size(), 4u);
    EXPECT_LT(j["results"]["post_state_spread"].get<double>(), 1e-6);
    // A strongly contractive run pushes the outcome axis off the grid.
    EXPECT_EQ(run("scenario repeated --scheme csm --lambda 8 --seed 1").exit_code, 3);
}

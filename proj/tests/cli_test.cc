// Copyright 2026 The lueq Authors
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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"
#include "lueq/io.h"

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string &args) {
    std::string cmd = std::string(LUEQ_CLI) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        out.append(buf, n);
    }
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string first_line(const std::string &s) {
    return s.substr(0, s.find('\n'));
}

}  // namespace

TEST(cli, power) {
    ASSERT_EQ(run("power --d 6 '{X, X^3Z^3, Z^4, X^2}'").out, "(1,2,2,3)\n");
    ASSERT_EQ(run("power --d 4 '{I}'").out, "(0)\n");
    ASSERT_EQ(run("power --d 30 '{X^12,Z^3,X^3Z^4,X^5Z^15}'").out, "(1,3,5,6)\n");
    ASSERT_EQ(run("power --d 6 '{X,'").code, 2);
    ASSERT_EQ(run("power '{X}'").code, 2);
}

TEST(cli, orbits) {
    auto r = run("uc-orbit --d 6 '{(0,0),(0,1),(0,2),(0,3)}'");
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(first_line(r.out), "24 sets");
    ASSERT_NE(r.out.find("{(0,0),(0,2),(3,0),(3,4)}"), std::string::npos);
    ASSERT_EQ(run("u-class --d 4 '{(0,0),(0,2),(2,0),(2,2)}' --count-only").out, "1\n");
    ASSERT_EQ(run("u-class --d 6 --count-only C3").out, "576\n");
    auto csv = run("uc-orbit --d 4 --format csv L");
    ASSERT_EQ(first_line(csv.out), "members");
    ASSERT_EQ(run("uc-orbit --d 6 --count-only '{Z,Z^2,Z^3,Z^4}'").code, 0);
}

TEST(cli, decide) {
    auto eq = run("decide u --d 6 C1 '{(0,0),(1,1),(2,2),(3,3)}'");
    ASSERT_EQ(eq.code, 0);
    ASSERT_EQ(eq.out, "equivalent\n");
    auto neq = run("decide u --d 4 K L");
    ASSERT_EQ(neq.code, 1);
    ASSERT_EQ(neq.out, "inequivalent\n");
    auto fast = run("decide uc --d 30 '{X^12,Z^3,X^3Z^4,X^5Z^15}' '{X^4Z^6,X^6Z^12,X^2,X^3Z^5}'");
    ASSERT_EQ(fast.code, 1);
    ASSERT_NE(fast.out.find("power vectors differ"), std::string::npos);
    auto same_pv = run("decide uc --d 5 '{I,Z,Z^2,Z^3,Z^4}' '{I,Z,Z^2,X,X^4}'");
    ASSERT_EQ(same_pv.code, 1);
    ASSERT_EQ(same_pv.out, "inequivalent\n");
    ASSERT_EQ(run("decide uc --d 6 C1 '{I,Z}'").code, 2);
    ASSERT_EQ(run("decide xx --d 6 C1 C2").code, 2);
}

TEST(cli, classify) {
    auto r = run("classify --d 4 --n 4");
    ASSERT_EQ(r.code, 0);
    ASSERT_NE(r.out.find("classes 10, standard sets 455, all sets 1820"), std::string::npos);
    ASSERT_NE(run("classify --d 6 --n 4 --count-only").out.find("classes 31, standard sets 6545, all sets 58905"),
              std::string::npos);
    ASSERT_NE(run("classify --d 4 --n 1").out.find("classes 1,"), std::string::npos);
    ASSERT_EQ(run("classify --d 6 --n 4 --cap 100").code, 3);
    ASSERT_EQ(run("classify --d 6 --n 4 --format csv --workers 1").out,
              run("classify --d 6 --n 4 --format csv --workers 4").out);
}

TEST(cli, classify_json_schema) {
    auto j = nlohmann::json::parse(run("classify --d 4 --n 4 --format json").out);
    ASSERT_EQ(j["d"], 4);
    ASSERT_EQ(j["n"], 4);
    ASSERT_EQ(j["classes"].size(), 10u);
    int total = 0;
    for (const auto &c : j["classes"]) {
        ASSERT_TRUE(c.contains("representative"));
        ASSERT_EQ(c["members"].size(), c["size"].get<std::size_t>());
        total += c["size"].get<int>();
    }
    ASSERT_EQ(total, 455);
    ASSERT_FALSE(nlohmann::json::parse(run("classify --d 4 --n 4 --format json --count-only").out)["classes"][0]
                     .contains("members"));
}

TEST(cli, tables) {
    for (int id : {1, 3, 7}) {
        char name[32];
        std::snprintf(name, sizeof(name), "/tables/table%02d.csv", id);
        std::ifstream in(std::string(LUEQ_DATA_DIR) + name);
        std::stringstream golden;
        golden << in.rdbuf();
        ASSERT_EQ(run("tables " + std::to_string(id)).out, golden.str()) << id;
    }
    ASSERT_EQ(run("tables 17").code, 2);
    ASSERT_EQ(run("tables 0").code, 2);
}

TEST(cli, emitted_sets_reparse) {
    auto r = run("uc-orbit --d 6 C3");
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    int count = 0;
    while (std::getline(lines, line)) {
        lueq::GpmSet set = lueq::parse_set(line, 6);
        ASSERT_EQ(set.str(), line);
        count++;
    }
    ASSERT_EQ(count, 144);
}

TEST(cli, verify_and_out_file) {
    auto r = run("verify");
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(r.out.find("FAIL"), std::string::npos);
    std::string path = ::testing::TempDir() + "lueq_out.txt";
    ASSERT_EQ(run("power --d 6 C1 --out " + path).out, "");
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    ASSERT_EQ(line, "(0,1,2,3)");
}

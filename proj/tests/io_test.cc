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

#include "lueq/io.h"

#include <fstream>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace lueq;

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST(io, parse_items) {
    ASSERT_EQ(parse_gpm("(2,3)", 6), (Gpm{2, 3}));
    ASSERT_EQ(parse_gpm("( 8 , -1 )", 6), (Gpm{2, 5}));
    ASSERT_EQ(parse_gpm("I", 6), (Gpm{0, 0}));
    ASSERT_EQ(parse_gpm("X", 6), (Gpm{1, 0}));
    ASSERT_EQ(parse_gpm("XZ^3", 6), (Gpm{1, 3}));
    ASSERT_EQ(parse_gpm("X^{12}Z^{15}", 30), (Gpm{12, 15}));
    ASSERT_EQ(parse_gpm("ZX", 6), (Gpm{1, 1}));
    ASSERT_THROW(parse_gpm("Y", 6), ParseError);
    ASSERT_THROW(parse_gpm("X^", 6), ParseError);
    ASSERT_THROW(parse_gpm("(1,2", 6), ParseError);
    ASSERT_THROW(parse_gpm("X", 2), ParseError);
}

TEST(io, parse_sets) {
    ASSERT_EQ(parse_set("{X, X^3Z^3, Z^4, X^2}", 6), GpmSet(6, {{1, 0}, {3, 3}, {0, 4}, {2, 0}}));
    ASSERT_EQ(parse_set("{(0,0),(0,2),(2,0),(2,2)}", 4), GpmSet(4, {{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
    ASSERT_EQ(parse_set("{I}", 4), GpmSet(4, {{0, 0}}));
    ASSERT_EQ(parse_set(" { I , (1,1) } ", 4), GpmSet(4, {{0, 0}, {1, 1}}));
    ASSERT_THROW(parse_set("{}", 4), ParseError);
    ASSERT_THROW(parse_set("{I,I}", 4), ParseError);
    ASSERT_THROW(parse_set("{I,X", 4), ParseError);
    ASSERT_THROW(parse_set("I,X", 4), ParseError);
    ASSERT_THROW(parse_set("{I,,X}", 4), ParseError);
}

TEST(io, aliases) {
    ASSERT_EQ(aliases().size(), 41u);
    ASSERT_EQ(parse_set("C1", 6), GpmSet(6, {{0, 0}, {0, 1}, {0, 2}, {0, 3}}));
    ASSERT_EQ(parse_set("G120", 4), GpmSet(4, {{0, 0}, {1, 0}, {0, 1}, {2, 0}}));
    ASSERT_EQ(*resolve_alias("C31"), GpmSet(6, {{0, 0}, {0, 3}, {3, 0}, {3, 3}}));
    ASSERT_FALSE(resolve_alias("C32").has_value());
    ASSERT_THROW(parse_set("C1", 4), ParseError);
    for (const auto &alias : aliases()) {
        GpmSet set = parse_set(alias.name, alias.d);
        ASSERT_EQ(set.size(), 4u) << alias.name;
        ASSERT_TRUE(set.is_standard()) << alias.name;
    }
}

TEST(io, emitted_strings_round_trip) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; trial++) {
        Int d = 3 + static_cast<Int>(rng() % 20);
        GpmSet set = test_util::random_standard_set(d, 1 + static_cast<Int>(rng() % 6), rng);
        ASSERT_EQ(parse_set(set.str(), d), set);
    }
}

TEST(io, table_specs) {
    ASSERT_THROW(table_spec(0), std::out_of_range);
    ASSERT_THROW(table_spec(kTableCount + 1), std::out_of_range);
    ASSERT_EQ(table_spec(1).generator, "C1");
    ASSERT_EQ(table_spec(16).generator, "G232");
}

TEST(io, tables_match_golden_files) {
    std::vector<std::size_t> expected_rows = {48, 48, 144, 144, 144, 144, 1, 6, 192, 48, 16, 12, 24, 96, 48, 12};
    for (int id = 1; id <= kTableCount; id++) {
        char name[32];
        std::snprintf(name, sizeof(name), "/tables/table%02d.csv", id);
        std::string golden = read_file(std::string(LUEQ_DATA_DIR) + name);
        ASSERT_FALSE(golden.empty()) << name;
        auto blocks = compute_table(id);
        std::size_t rows = 0;
        for (const auto &b : blocks) {
            rows += b.orbit.size();
        }
        ASSERT_EQ(rows, expected_rows[static_cast<std::size_t>(id - 1)]) << id;
        ASSERT_EQ(table_csv(blocks), golden) << id;
    }
}

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

#ifndef LUEQ_IO_H
#define LUEQ_IO_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lueq/classify.h"
#include "lueq/gpm.h"

namespace lueq {

class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Parses one item: "(s,t)" or a product over I, X, Z with optional
/// exponents written "^k" or "^{k}", e.g. "X^3Z^{5}". Whitespace is ignored
/// and exponents are reduced mod d. Throws ParseError.
Gpm parse_gpm(std::string_view text, Int d);

/// Parses "{item, item, ...}" or a named alias such as "C17" or "G120".
/// Throws ParseError on bad syntax, an alias of another dimension, or a
/// malformed set (duplicate members, empty braces).
GpmSet parse_set(std::string_view text, Int d);

struct Alias {
    std::string name;
    Int d;
    std::string text;
};

/// C1..C31 at d = 6, then K, L, G120, G131, G133, G212, G230, G112, G220,
/// G232 at d = 4.
const std::vector<Alias> &aliases();

/// The alias with this name, if any.
std::optional<GpmSet> resolve_alias(std::string_view name);

/// One UC orbit of a golden table.
struct TableBlock {
    std::string label;
    Orbit orbit;
};

struct TableSpec {
    int id;
    /// Alias of the generating set.
    std::string generator;
    /// Right-translation applied to the generator for each block, with the
    /// block label.
    std::vector<std::pair<std::string, Gpm>> blocks;
};

constexpr int kTableCount = 16;

/// Throws std::out_of_range unless 1 <= id <= kTableCount.
const TableSpec &table_spec(int id);

std::vector<TableBlock> compute_table(int id);

/// "block,members" header, then one "label,s:t;s:t;..." row per set.
std::string table_csv(const std::vector<TableBlock> &blocks);

}  // namespace lueq

#endif

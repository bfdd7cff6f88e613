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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace lueq {

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out += c;
        }
    }
    return out;
}

Int parse_int(std::string_view text, std::string_view context) {
    Int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("bad integer '" + std::string(text) + "' in '" + std::string(context) + "'");
    }
    return value;
}

/// Reads an optional "^k" or "^{k}" at pos; returns 1 when absent.
Int read_exponent(const std::string &text, std::size_t &pos) {
    if (pos >= text.size() || text[pos] != '^') {
        return 1;
    }
    pos++;
    std::size_t end;
    if (pos < text.size() && text[pos] == '{') {
        end = text.find('}', pos);
        if (end == std::string::npos) {
            throw ParseError("unterminated exponent in '" + text + "'");
        }
        Int value = parse_int(std::string_view(text).substr(pos + 1, end - pos - 1), text);
        pos = end + 1;
        return value;
    }
    end = pos;
    if (end < text.size() && text[end] == '-') {
        end++;
    }
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) {
        end++;
    }
    Int value = parse_int(std::string_view(text).substr(pos, end - pos), text);
    pos = end;
    return value;
}

Gpm parse_item(const std::string &item, Int d) {
    if (item.empty()) {
        throw ParseError("empty set member");
    }
    if (item.front() == '(') {
        auto comma = item.find(',');
        if (item.back() != ')' || comma == std::string::npos) {
            throw ParseError("expected '(s,t)', got '" + item + "'");
        }
        std::string_view view(item);
        Int s = parse_int(view.substr(1, comma - 1), item);
        Int t = parse_int(view.substr(comma + 1, item.size() - comma - 2), item);
        return {mod(s, d), mod(t, d)};
    }
    Int s = 0, t = 0;
    std::size_t pos = 0;
    while (pos < item.size()) {
        char c = item[pos++];
        if (c == 'I') {
            continue;
        }
        if (c != 'X' && c != 'Z') {
            throw ParseError("unexpected '" + std::string(1, c) + "' in '" + item + "'");
        }
        Int k = read_exponent(item, pos);
        (c == 'X' ? s : t) += k;
    }
    return {mod(s, d), mod(t, d)};
}

void check_parse_dimension(Int d) {
    if (d < 3 || d > kMaxDimension) {
        throw ParseError("dimension must lie in [3, 65536], got " + std::to_string(d));
    }
}

}  // namespace

Gpm parse_gpm(std::string_view text, Int d) {
    check_parse_dimension(d);
    return parse_item(strip_spaces(text), d);
}

GpmSet parse_set(std::string_view text, Int d) {
    check_parse_dimension(d);
    std::string body = strip_spaces(text);
    if (body.empty() || body.front() != '{') {
        for (const auto &alias : aliases()) {
            if (alias.name == body) {
                if (alias.d != d) {
                    throw ParseError(
                        "alias " + alias.name + " is defined for d=" + std::to_string(alias.d) + ", not d=" +
                        std::to_string(d));
                }
                return parse_set(alias.text, d);
            }
        }
        throw ParseError("expected '{...}' or a known alias, got '" + body + "'");
    }
    if (body.back() != '}') {
        throw ParseError("missing closing '}' in '" + body + "'");
    }
    body = body.substr(1, body.size() - 2);
    std::vector<Gpm> members;
    std::string item;
    int depth = 0;
    for (char c : body) {
        if (c == '(') {
            depth++;
        } else if (c == ')') {
            depth--;
        }
        if (c == ',' && depth == 0) {
            members.push_back(parse_item(item, d));
            item.clear();
        } else {
            item += c;
        }
    }
    if (!item.empty() || !members.empty()) {
        members.push_back(parse_item(item, d));
    }
    try {
        return GpmSet(d, std::move(members));
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
}

const std::vector<Alias> &aliases() {
    static const std::vector<Alias> table = {
        {"C1", 6, "{I,Z,Z^2,Z^3}"},
        {"C2", 6, "{I,Z,Z^2,Z^4}"},
        {"C3", 6, "{I,Z,Z^2,X}"},
        {"C4", 6, "{I,Z,Z^2,X^2}"},
        {"C5", 6, "{I,Z,Z^2,X^2Z}"},
        {"C6", 6, "{I,Z,Z^2,X^3}"},
        {"C7", 6, "{I,Z,Z^2,X^3Z}"},
        {"C8", 6, "{I,Z,Z^3,Z^4}"},
        {"C9", 6, "{I,Z,Z^3,X}"},
        {"C10", 6, "{I,Z,Z^3,X^2}"},
        {"C11", 6, "{I,Z,Z^3,X^2Z}"},
        {"C12", 6, "{I,Z,Z^3,X^3}"},
        {"C13", 6, "{I,Z,Z^3,X^3Z}"},
        {"C14", 6, "{I,Z,Z^3,X^5}"},
        {"C15", 6, "{I,Z,X,XZ}"},
        {"C16", 6, "{I,Z,X,XZ^2}"},
        {"C17", 6, "{I,Z,X,XZ^3}"},
        {"C18", 6, "{I,Z,X,X^2Z^2}"},
        {"C19", 6, "{I,Z,X,X^3Z^5}"},
        {"C20", 6, "{I,Z,X,X^4Z^4}"},
        {"C21", 6, "{I,Z,X^2,X^2Z}"},
        {"C22", 6, "{I,Z,X^2,X^2Z^2}"},
        {"C23", 6, "{I,Z,X^2,X^2Z^5}"},
        {"C24", 6, "{I,Z,X^2,X^3Z}"},
        {"C25", 6, "{I,Z,X^2,X^4}"},
        {"C26", 6, "{I,Z,X^3,X^3Z}"},
        {"C27", 6, "{I,Z,X^3,X^3Z^3}"},
        {"C28", 6, "{I,Z,X^3,X^3Z^5}"},
        {"C29", 6, "{I,Z^2,Z^4,X^2}"},
        {"C30", 6, "{I,Z^2,X^2,X^2Z^2}"},
        {"C31", 6, "{I,Z^3,X^3,X^3Z^3}"},
        {"K", 4, "{(0,0),(0,2),(2,0),(2,2)}"},
        {"L", 4, "{I,X,X^2,X^3}"},
        {"G120", 4, "{I,X,Z,X^2}"},
        {"G131", 4, "{I,X,Z,X^3Z}"},
        {"G133", 4, "{I,X,Z,X^3Z^3}"},
        {"G212", 4, "{I,X,Z^2,XZ^2}"},
        {"G230", 4, "{I,X,Z^2,X^3}"},
        {"G112", 4, "{I,X,Z,XZ^2}"},
        {"G220", 4, "{I,X,Z^2,X^2}"},
        {"G232", 4, "{I,X,Z^2,X^3Z^2}"},
    };
    return table;
}

std::optional<GpmSet> resolve_alias(std::string_view name) {
    for (const auto &alias : aliases()) {
        if (alias.name == name) {
            return parse_set(alias.text, alias.d);
        }
    }
    return std::nullopt;
}

const TableSpec &table_spec(int id) {
    static const std::vector<TableSpec> specs = {
        {1, "C1", {{"UC(C1)", {0, 0}}, {"UC(C1_1)", {0, 1}}}},
        {2, "C2", {{"UC(C2)", {0, 0}}, {"UC(C2_1)", {0, 1}}, {"UC(C2_3)", {0, 4}}}},
        {3, "C3", {{"UC(C3)", {0, 0}}}},
        {4, "C3", {{"UC(C3_1)", {0, 1}}}},
        {5, "C3", {{"UC(C3_2)", {0, 2}}}},
        {6, "C3", {{"UC(C3_3)", {1, 0}}}},
        {7, "K", {{"UC(K)", {0, 0}}}},
        {8, "L", {{"UC(L)", {0, 0}}}},
        {9, "G120", {{"UC(G120)", {0, 0}}, {"UC(G120_1)", {1, 0}}, {"UC(G120_2)", {0, 1}}, {"UC(G120_3)", {2, 0}}}},
        {10, "G131", {{"UC(G131)", {0, 0}}}},
        {11, "G133", {{"UC(G133)", {0, 0}}}},
        {12, "G212", {{"UC(G212)", {0, 0}}}},
        {13, "G230", {{"UC(G230)", {0, 0}}, {"UC(G230_1)", {1, 0}}}},
        {14, "G112", {{"UC(G112)", {0, 0}}, {"UC(G112_1)", {1, 0}}, {"UC(G112_2)", {0, 1}}}},
        {15, "G220", {{"UC(G220)", {0, 0}}, {"UC(G220_1)", {1, 0}}, {"UC(G220_2)", {0, 2}}}},
        {16, "G232", {{"UC(G232)", {0, 0}}}},
    };
    if (id < 1 || id > kTableCount) {
        throw std::out_of_range("table id must lie in [1, " + std::to_string(kTableCount) + "]");
    }
    return specs[static_cast<std::size_t>(id - 1)];
}

std::vector<TableBlock> compute_table(int id) {
    const TableSpec &spec = table_spec(id);
    GpmSet generator = *resolve_alias(spec.generator);
    std::vector<TableBlock> blocks;
    for (const auto &[label, shift] : spec.blocks) {
        blocks.push_back({label, uc_orbit(right_translate(generator, shift))});
    }
    return blocks;
}

std::string table_csv(const std::vector<TableBlock> &blocks) {
    std::string out = "block,members\n";
    for (const auto &block : blocks) {
        for (const auto &set : block.orbit.sets) {
            out += block.label + "," + set.csv_str() + "\n";
        }
    }
    return out;
}

}  // namespace lueq

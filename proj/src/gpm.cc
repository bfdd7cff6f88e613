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

#include "lueq/gpm.h"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lueq {

namespace {

void check_dimension(Int d) {
    if (d < 2 || d > kMaxDimension) {
        throw std::invalid_argument("dimension must lie in [2, 65536], got " + std::to_string(d));
    }
}

}  // namespace

Gpm reduced(Gpm g, Int d) {
    return {mod(g.s, d), mod(g.t, d)};
}

Gpm multiply(Gpm g1, Gpm g2, Int d) {
    return {mod(g1.s + g2.s, d), mod(g1.t + g2.t, d)};
}

Gpm inverse(Gpm g, Int d) {
    return {mod(-g.s, d), mod(-g.t, d)};
}

Int essential_order(Gpm g, Int d) {
    check_dimension(d);
    return d / gcd_many({mod(g.s, d), mod(g.t, d), d});
}

Int essential_power(Gpm g, Int d) {
    check_dimension(d);
    g = reduced(g, d);
    if (g.is_identity()) {
        return 0;
    }
    return gcd_many({g.s, g.t, d});
}

Residue commutation_exponent(Gpm g1, Gpm g2, Int d) {
    check_dimension(d);
    return Residue(mod(g1.s * g2.t - g2.s * g1.t, d), d);
}

std::string to_string(Gpm g) {
    return "(" + std::to_string(g.s) + "," + std::to_string(g.t) + ")";
}

std::string to_string(const PowerVector &v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.entries.size(); k++) {
        if (k) {
            out += ",";
        }
        out += std::to_string(v.entries[k]);
    }
    return out + ")";
}

GpmSet::GpmSet(Int d, std::vector<Gpm> members) : d_(d), members_(std::move(members)) {
    if (d < 3 || d > kMaxDimension) {
        throw std::invalid_argument("GpmSet: dimension must lie in [3, 65536], got " + std::to_string(d));
    }
    if (members_.empty()) {
        throw std::invalid_argument("GpmSet: a set needs at least one member");
    }
    for (auto &g : members_) {
        g = reduced(g, d);
    }
    std::sort(members_.begin(), members_.end());
    auto dup = std::adjacent_find(members_.begin(), members_.end());
    if (dup != members_.end()) {
        throw std::invalid_argument("GpmSet: duplicate member " + to_string(*dup));
    }
}

GpmSet GpmSet::from_canonical(Int d, std::vector<Gpm> members) {
    assert(!members.empty());
    assert(std::is_sorted(members.begin(), members.end()));
    assert(std::adjacent_find(members.begin(), members.end()) == members.end());
    GpmSet result;
    result.d_ = d;
    result.members_ = std::move(members);
    return result;
}

bool GpmSet::contains(Gpm g) const {
    return std::binary_search(members_.begin(), members_.end(), g);
}

std::string GpmSet::str() const {
    std::string out = "{";
    for (std::size_t k = 0; k < members_.size(); k++) {
        if (k) {
            out += ",";
        }
        out += to_string(members_[k]);
    }
    return out + "}";
}

std::string GpmSet::csv_str() const {
    std::string out;
    for (std::size_t k = 0; k < members_.size(); k++) {
        if (k) {
            out += ";";
        }
        out += std::to_string(members_[k].s) + ":" + std::to_string(members_[k].t);
    }
    return out;
}

std::strong_ordering GpmSet::operator<=>(const GpmSet &other) const {
    if (auto c = d_ <=> other.d_; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(
        members_.begin(), members_.end(), other.members_.begin(), other.members_.end());
}

std::ostream &operator<<(std::ostream &out, const GpmSet &set) {
    return out << set.str();
}

PowerVector power_vector(const GpmSet &set) {
    PowerVector v;
    v.entries.reserve(set.size());
    for (const auto &g : set) {
        v.entries.push_back(essential_power(g, set.dimension()));
    }
    std::sort(v.entries.begin(), v.entries.end());
    return v;
}

GpmSet right_translate(const GpmSet &set, Gpm g) {
    Int d = set.dimension();
    Gpm shift = inverse(reduced(g, d), d);
    std::vector<Gpm> out;
    out.reserve(set.size());
    for (const auto &m : set) {
        out.push_back(multiply(m, shift, d));
    }
    std::sort(out.begin(), out.end());
    return GpmSet::from_canonical(d, std::move(out));
}

std::vector<GpmSet> standardize_all(const GpmSet &set) {
    std::vector<GpmSet> result;
    for (const auto &g : set) {
        GpmSet candidate = right_translate(set, g);
        if (std::find(result.begin(), result.end(), candidate) == result.end()) {
            result.push_back(std::move(candidate));
        }
    }
    return result;
}

std::size_t GpmSetHash::operator()(const GpmSet &set) const noexcept {
    // FNV-1a over the packed member indices.
    std::uint64_t h = 1469598103934665603ull;
    auto d = static_cast<std::uint64_t>(set.dimension());
    for (const auto &g : set) {
        h ^= static_cast<std::uint64_t>(g.s) * d + static_cast<std::uint64_t>(g.t);
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

}  // namespace lueq

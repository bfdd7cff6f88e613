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

#include "lueq/reduce.h"

#include <algorithm>
#include <stdexcept>

namespace lueq {

namespace {

/// Lexicographically smallest member of minimum nonzero essential power.
/// Returns the identity when every member is the identity.
Gpm pivot(const std::vector<Gpm> &members, Int d) {
    Gpm best{0, 0};
    Int best_power = 0;
    for (const auto &g : members) {
        Int p = essential_power(g, d);
        if (p == 0) {
            continue;
        }
        if (best_power == 0 || p < best_power || (p == best_power && g < best)) {
            best = g;
            best_power = p;
        }
    }
    return best;
}

std::vector<Gpm> canonical(std::vector<Gpm> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

}  // namespace

bool is_reduced_form(const GpmSet &set) {
    if (!set.is_standard()) {
        return false;
    }
    Int d = set.dimension();
    Gpm p = pivot(set.members(), d);
    if (p.is_identity()) {
        return true;
    }
    Int b = essential_power(p, d);
    if (!set.contains({0, b})) {
        return false;
    }
    return std::all_of(set.begin(), set.end(), [b](const Gpm &g) {
        return g.t % b == 0;
    });
}

ReductionResult reduce(const GpmSet &set) {
    if (!set.is_standard()) {
        throw std::invalid_argument("reduce: set " + set.str() + " is not standard");
    }
    Int d = set.dimension();
    std::vector<Gpm> work(set.begin(), set.end());
    GpmSet image = set;
    std::vector<Symplectic2> chain;
    std::size_t division_steps = 0;

    Gpm p = pivot(work, d);
    if (p.is_identity()) {
        return {set, set, LocalCliffordContext(d, d, d), {}, 0};
    }
    Int b = 0;
    while (true) {
        Symplectic2 op = clifford_to_z(p, d);
        for (auto &g : work) {
            g = apply_symplectic(op, g);
        }
        image = apply_symplectic_set(op, image);
        chain.push_back(op);
        b = essential_power(p, d);
        bool divisible = std::all_of(work.begin(), work.end(), [b](const Gpm &g) {
            return g.t % b == 0;
        });
        if (divisible) {
            break;
        }
        for (auto &g : work) {
            g.t %= b;
        }
        division_steps++;
        p = pivot(work, d);
    }

    std::vector<Int> xs{d};
    for (const auto &g : work) {
        xs.push_back(g.s);
    }
    Int a = gcd_many(xs);
    return {
        GpmSet::from_canonical(d, canonical(std::move(work))),
        std::move(image),
        LocalCliffordContext(a, b, d),
        std::move(chain),
        division_steps,
    };
}

}  // namespace lueq

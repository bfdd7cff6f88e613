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

#include "lueq/classify.h"

#include <algorithm>
#include <thread>
#include <unordered_set>

#include "lueq/clifford.h"
#include "lueq/reduce.h"

namespace lueq {

namespace {

void sort_unique(std::vector<GpmSet> &sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

void check_comparable(const GpmSet &m, const GpmSet &n, const char *who) {
    if (m.dimension() != n.dimension()) {
        throw std::invalid_argument(std::string(who) + ": dimension mismatch");
    }
    if (m.size() != n.size()) {
        throw std::invalid_argument(std::string(who) + ": cardinality mismatch");
    }
}

/// Lexicographic walk over the (n-1)-subsets of the nonzero pairs, each
/// completed with the identity. Pair (s, t) has index s * d + t.
class StandardSetWalker {
   public:
    StandardSetWalker(Int d, Int n) : d_(d), k_(n - 1), idx_(static_cast<std::size_t>(n - 1)) {
        for (Int i = 0; i < k_; i++) {
            idx_[static_cast<std::size_t>(i)] = i + 1;
        }
        done_ = k_ > d * d - 1;
    }

    bool done() const {
        return done_;
    }

    GpmSet current() const {
        std::vector<Gpm> members{{0, 0}};
        for (Int i : idx_) {
            members.push_back({i / d_, i % d_});
        }
        return GpmSet::from_canonical(d_, std::move(members));
    }

    void advance() {
        Int top = d_ * d_ - 1;
        Int i = k_ - 1;
        while (i >= 0 && idx_[static_cast<std::size_t>(i)] == top - (k_ - 1 - i)) {
            i--;
        }
        if (i < 0) {
            done_ = true;
            return;
        }
        idx_[static_cast<std::size_t>(i)]++;
        for (Int j = i + 1; j < k_; j++) {
            idx_[static_cast<std::size_t>(j)] = idx_[static_cast<std::size_t>(j - 1)] + 1;
        }
    }

   private:
    Int d_;
    Int k_;
    std::vector<Int> idx_;
    bool done_ = false;
};

}  // namespace

bool Orbit::contains(const GpmSet &set) const {
    return std::binary_search(sets.begin(), sets.end(), set);
}

Orbit uc_orbit(const GpmSet &set) {
    ReductionResult r = reduce(set);
    Orbit orbit{set.dimension(), {}};
    const auto &ctx = r.context;
    if (ctx.a() == ctx.d() && ctx.b() == ctx.d()) {
        orbit.sets.push_back(set);
        return orbit;
    }
    for (const auto &op : enumerate_local_cliffords(ctx)) {
        orbit.sets.push_back(apply_symplectic_set(op, r.image));
    }
    sort_unique(orbit.sets);
    return orbit;
}

Orbit u_class(const GpmSet &set) {
    Orbit result{set.dimension(), {}};
    for (const auto &standard : standardize_all(set)) {
        Orbit part = uc_orbit(standard);
        result.sets.insert(result.sets.end(), part.sets.begin(), part.sets.end());
    }
    sort_unique(result.sets);
    return result;
}

bool decide_uc(const GpmSet &m, const GpmSet &n) {
    check_comparable(m, n, "decide_uc");
    if (!m.is_standard() || !n.is_standard()) {
        throw std::invalid_argument("decide_uc: both sets must be standard");
    }
    if (power_vector(m) != power_vector(n)) {
        return false;
    }
    return uc_orbit(m).contains(n);
}

bool decide_u(const GpmSet &m, const GpmSet &n) {
    check_comparable(m, n, "decide_u");
    return u_class(m).contains(right_translate(n, n[0]));
}

Int Partition::total_standard() const {
    Int total = 0;
    for (const auto &c : classes) {
        total += c.size_standard;
    }
    return total;
}

Int standard_set_count(Int d, Int n) {
    return binomial(d * d - 1, n - 1);
}

Partition classify_all(Int d, Int n, const ClassifyOptions &options) {
    if (d < 3 || d > kMaxDimension) {
        throw std::invalid_argument("classify_all: dimension must lie in [3, 65536]");
    }
    if (n < 1 || n > d * d) {
        throw std::invalid_argument("classify_all: set size must lie in [1, d^2]");
    }
    if (options.cap < 1) {
        throw std::invalid_argument("classify_all: cap must be positive");
    }
    Int count = standard_set_count(d, n);
    if (count > options.cap) {
        throw ResourceCapExceeded(
            "classify_all: " + std::to_string(count) + " standard sets exceed the cap of " +
            std::to_string(options.cap));
    }

    Partition partition{d, n, {}};
    std::unordered_set<GpmSet, GpmSetHash> visited;
    StandardSetWalker walker(d, n);
    std::size_t workers = std::max(1u, options.workers);
    std::size_t batch = workers == 1 ? 1 : 4 * workers;

    while (!walker.done()) {
        std::vector<GpmSet> seeds;
        while (seeds.size() < batch && !walker.done()) {
            GpmSet candidate = walker.current();
            walker.advance();
            if (!visited.contains(candidate)) {
                seeds.push_back(std::move(candidate));
            }
        }
        std::vector<Orbit> classes(seeds.size());
        if (workers == 1 || seeds.size() == 1) {
            for (std::size_t k = 0; k < seeds.size(); k++) {
                classes[k] = u_class(seeds[k]);
            }
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t w = 0; w < workers; w++) {
                pool.emplace_back([&, w] {
                    for (std::size_t k = w; k < seeds.size(); k += workers) {
                        classes[k] = u_class(seeds[k]);
                    }
                });
            }
        }
        for (std::size_t k = 0; k < seeds.size(); k++) {
            if (visited.contains(seeds[k])) {
                continue;
            }
            Orbit &orbit = classes[k];
            visited.insert(orbit.sets.begin(), orbit.sets.end());
            ClassEntry entry{seeds[k], static_cast<Int>(orbit.size()), 0, std::nullopt};
            entry.size_total = entry.size_standard * d * d / n;
            if (options.keep_members) {
                entry.members = std::move(orbit.sets);
            }
            partition.classes.push_back(std::move(entry));
        }
    }
    return partition;
}

}  // namespace lueq

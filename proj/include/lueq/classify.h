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

#ifndef LUEQ_CLASSIFY_H
#define LUEQ_CLASSIFY_H

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lueq/gpm.h"

namespace lueq {

/// A deduplicated collection of standard sets sorted ascending.
struct Orbit {
    Int d = 0;
    std::vector<GpmSet> sets;

    std::size_t size() const {
        return sets.size();
    }
    bool contains(const GpmSet &set) const;
};

/// Every standard set UC-equivalent to `set`.
/// Throws std::invalid_argument for a non-standard set.
Orbit uc_orbit(const GpmSet &set);

/// Every standard set U-equivalent to `set`: the union of the UC orbits of
/// its standardizations.
Orbit u_class(const GpmSet &set);

/// UC-equivalence of two standard sets. Rejects early on differing power
/// vectors. Throws std::invalid_argument on a dimension or size mismatch or
/// a non-standard argument.
bool decide_uc(const GpmSet &m, const GpmSet &n);

/// U-equivalence of two sets. Throws std::invalid_argument on a dimension or
/// size mismatch.
bool decide_u(const GpmSet &m, const GpmSet &n);

class ResourceCapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct ClassifyOptions {
    /// Largest number of standard sets a single run may visit.
    Int cap = 10'000'000;
    /// Threads used to expand orbit seeds. Results do not depend on it.
    unsigned workers = 1;
    bool keep_members = false;
};

struct ClassEntry {
    /// Lexicographically smallest standard member.
    GpmSet representative;
    /// Number of standard sets in the class.
    Int size_standard = 0;
    /// Number of sets in the class, standard or not.
    Int size_total = 0;
    std::optional<std::vector<GpmSet>> members;
};

struct Partition {
    Int d = 0;
    Int n = 0;
    std::vector<ClassEntry> classes;

    Int total_standard() const;
};

/// Number of standard n-sets of dimension d.
Int standard_set_count(Int d, Int n);

/// Splits all standard n-sets of dimension d into U-equivalence classes,
/// in order of their representatives. Throws std::invalid_argument on bad
/// (d, n) and ResourceCapExceeded when the set count exceeds options.cap.
Partition classify_all(Int d, Int n, const ClassifyOptions &options = {});

}  // namespace lueq

#endif

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

#ifndef LUEQ_REDUCE_H
#define LUEQ_REDUCE_H

#include <cstddef>
#include <vector>

#include "lueq/clifford.h"
#include "lueq/gpm.h"

namespace lueq {

/// Outcome of the alternating Clifford / remainder reduction.
struct ReductionResult {
    /// The final working set {I, Z^b, X^{s_i} Z^{t_i}, ...} with b | t_i.
    /// Remainder substitution can merge members, so it may be smaller than
    /// the input.
    GpmSet reduced;
    /// The input pushed through the Clifford steps only. Same size as the
    /// input and generating the same subgroup as `reduced`; local Clifford
    /// operators of `context` act on it without collisions.
    GpmSet image;
    LocalCliffordContext context;
    /// Clifford steps in application order.
    std::vector<Symplectic2> chain;
    std::size_t division_steps = 0;
};

/// True when the set is standard, contains Z^b for its minimum nonzero
/// essential power b, and every Z-exponent is a multiple of b. {I} passes.
bool is_reduced_form(const GpmSet &set);

/// Brings a standard set into the form above. {I} maps to context (d, d).
/// Throws std::invalid_argument for a non-standard set.
ReductionResult reduce(const GpmSet &set);

}  // namespace lueq

#endif

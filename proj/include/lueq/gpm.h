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

#ifndef LUEQ_GPM_H
#define LUEQ_GPM_H

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "lueq/arith.h"

namespace lueq {

/// The generalized Pauli matrix X^s Z^t on C^d, global phase discarded.
///
/// A Gpm does not carry its dimension; the owning GpmSet (or the caller)
/// supplies d. Constructed values are expected to be reduced into [0, d).
struct Gpm {
    Int s = 0;
    Int t = 0;

    bool is_identity() const {
        return s == 0 && t == 0;
    }

    auto operator<=>(const Gpm &) const = default;
    bool operator==(const Gpm &) const = default;
};

/// Reduces both exponents into [0, d).
Gpm reduced(Gpm g, Int d);

/// Phase-free product g1 * g2.
Gpm multiply(Gpm g1, Gpm g2, Int d);

/// Phase-free inverse (adjoint) of g.
Gpm inverse(Gpm g, Int d);

/// d / gcd(s, t, d): the smallest k with g^k proportional to the identity.
Int essential_order(Gpm g, Int d);

/// gcd(s, t, d) for non-identity g, and 0 for the identity.
Int essential_power(Gpm g, Int d);

/// The exponent c with g2 g1 = w^c g1 g2, computed as s1 t2 - s2 t1 mod d.
Residue commutation_exponent(Gpm g1, Gpm g2, Int d);

/// Renders as "(s,t)".
std::string to_string(Gpm g);

/// Ascending list of essential powers of the members of a set.
struct PowerVector {
    std::vector<Int> entries;

    bool operator==(const PowerVector &) const = default;
};

std::string to_string(const PowerVector &v);

/// A canonical collection of distinct GPMs on C^d.
///
/// Members are kept sorted ascending in lexicographic (s, t) order, which is
/// the basis for equality, ordering and hashing.
class GpmSet {
   public:
    /// Validating constructor. Exponents outside [0, d) are reduced.
    /// Throws std::invalid_argument on d outside [3, 2^16], an empty member
    /// list, or two members that coincide after reduction.
    GpmSet(Int d, std::vector<Gpm> members);

    /// Builds from members that are already reduced, sorted and distinct.
    /// Only checked by assertions.
    static GpmSet from_canonical(Int d, std::vector<Gpm> members);

    Int dimension() const {
        return d_;
    }
    std::size_t size() const {
        return members_.size();
    }
    const std::vector<Gpm> &members() const {
        return members_;
    }
    const Gpm &operator[](std::size_t k) const {
        return members_[k];
    }
    auto begin() const {
        return members_.begin();
    }
    auto end() const {
        return members_.end();
    }

    bool contains(Gpm g) const;

    /// True when the identity (0,0) is a member.
    bool is_standard() const {
        return !members_.empty() && members_.front().is_identity();
    }

    /// Renders as "{(s,t),(s,t),...}".
    std::string str() const;

    /// Renders as "s:t;s:t;..." for CSV output.
    std::string csv_str() const;

    bool operator==(const GpmSet &other) const = default;
    std::strong_ordering operator<=>(const GpmSet &other) const;

   private:
    GpmSet() = default;

    Int d_ = 0;
    std::vector<Gpm> members_;
};

std::ostream &operator<<(std::ostream &out, const GpmSet &set);

PowerVector power_vector(const GpmSet &set);

/// The set {g_i * g^dagger}: every member shifted by -g.
GpmSet right_translate(const GpmSet &set, Gpm g);

/// Right-translates by every member in turn, keeping the first occurrence of
/// each distinct result. Each returned set is standard.
std::vector<GpmSet> standardize_all(const GpmSet &set);

struct GpmSetHash {
    std::size_t operator()(const GpmSet &set) const noexcept;
};

}  // namespace lueq

#endif

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

#ifndef LUEQ_CLIFFORD_H
#define LUEQ_CLIFFORD_H

#include <string>
#include <vector>

#include "lueq/arith.h"
#include "lueq/gpm.h"

namespace lueq {

/// Action of a (local) Clifford operator on exponent pairs.
///
/// Laid out as the matrix [[u1, u2], [v1, v2]] acting on columns (s, t):
/// the first column is the image of the X part, the second the image of the
/// Z part. Composition is the matrix product mod d.
struct Symplectic2 {
    Int u1 = 1;
    Int v1 = 0;
    Int u2 = 0;
    Int v2 = 1;
    Int d = 3;

    static Symplectic2 identity(Int d) {
        return {1, 0, 0, 1, d};
    }

    /// u1 v2 - u2 v1 mod d.
    Int determinant() const;

    /// (*this) after other: the matrix product this * other mod d.
    Symplectic2 compose(const Symplectic2 &other) const;

    std::string str() const;

    bool operator==(const Symplectic2 &) const = default;
};

/// (u1 s + u2 t, v1 s + v2 t) mod d.
Gpm apply_symplectic(const Symplectic2 &op, Gpm g);

/// Member-wise image, re-canonicalized. Throws std::logic_error when two
/// members land on the same pair, which means the operator is not a local
/// Clifford operator of this set.
GpmSet apply_symplectic_set(const Symplectic2 &op, const GpmSet &set);

/// A determinant-1 operator sending X^s Z^t to Z^{gcd(s,t,d)}.
/// Throws std::invalid_argument for the identity.
Symplectic2 clifford_to_z(Gpm g, Int d);

/// The pair (X^a, Z^b) whose local Clifford operators are enumerated.
/// a = d encodes a set whose X-exponents all vanish.
class LocalCliffordContext {
   public:
    /// Throws std::invalid_argument unless a and b are positive divisors of d.
    LocalCliffordContext(Int a, Int b, Int d);

    Int a() const {
        return a_;
    }
    Int b() const {
        return b_;
    }
    Int d() const {
        return d_;
    }
    /// Range bound for u1, v1.
    Int x_range() const {
        return d_ / a_;
    }
    /// Range bound for u2, v2.
    Int z_range() const {
        return d_ / b_;
    }

    bool operator==(const LocalCliffordContext &) const = default;

   private:
    Int a_;
    Int b_;
    Int d_;
};

/// The three gcd/congruence conditions characterising a local Clifford
/// operator on (X^a, Z^b):
///   gcd(u1, v1, d/a) = 1 = gcd(u2, v2, d/b),
///   (u1 v2 - u2 v1) a b = a b  (mod d),
///   gcd(u1 v2 - u2 v1, d/a, d/b) = 1.
/// Entries must lie in [0, d/a) x [0, d/a) x [0, d/b) x [0, d/b).
bool check_local_clifford(const LocalCliffordContext &ctx, Int u1, Int v1, Int u2, Int v2);

/// The prime-power form of the same predicate for d = p^alpha, a = p^gamma,
/// b = p^beta: only one of the congruence and the determinant-unit condition
/// is tested, chosen by comparing gamma + beta against alpha. For a = d only
/// gcd(u2, v2, p) = 1 is tested, and symmetrically for b = d. Throws
/// std::invalid_argument when d is not a prime power.
bool check_local_clifford_prime_power(const LocalCliffordContext &ctx, Int u1, Int v1, Int u2, Int v2);

/// Every operator passing check_local_clifford within the ranges, in
/// row-major (u1, v1, u2, v2) order.
std::vector<Symplectic2> enumerate_local_cliffords(const LocalCliffordContext &ctx);

/// The permutation W|i + j a> = |i + u j a> of Z_d, returned as image[x].
/// Throws std::invalid_argument unless a | d and gcd(u, d/a) = 1.
std::vector<Int> scaling_permutation(Int u, Int a, Int d);

}  // namespace lueq

#endif

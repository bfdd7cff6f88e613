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

#ifndef LUEQ_ARITH_H
#define LUEQ_ARITH_H

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace lueq {

/// Exact integer type used for all exponent arithmetic. Products of two
/// residues below 2^16 plus a few additions never leave this range.
using Int = std::int64_t;

/// Largest dimension accepted anywhere in the library.
constexpr Int kMaxDimension = Int{1} << 16;

/// Reduces x into [0, m). m must be positive.
constexpr Int mod(Int x, Int m) {
    Int r = x % m;
    return r < 0 ? r + m : r;
}

/// Non-negative gcd of two integers; gcd(0, 0) = 0.
constexpr Int gcd(Int a, Int b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/// gcd of a non-empty list. The all-zero list has gcd 0.
/// Throws std::invalid_argument on an empty list.
Int gcd_many(std::span<const Int> values);
Int gcd_many(std::initializer_list<Int> values);

struct ExtGcd {
    Int g;
    Int x;
    Int y;
};

/// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) and g >= 0.
ExtGcd ext_gcd(Int a, Int b);

/// Whether a1*s + a2*t = c (mod m) has an integer solution (s, t).
bool two_var_congruence_solvable(Int a1, Int a2, Int c, Int m);

/// A value of Z_d with its modulus attached.
class Residue {
   public:
    Residue(Int value, Int modulus);

    Int value() const {
        return value_;
    }
    Int modulus() const {
        return modulus_;
    }

    bool operator==(const Residue &other) const = default;

   private:
    Int value_;
    Int modulus_;
};

/// Positive divisors of n in ascending order (trial division).
std::vector<Int> divisors(Int n);

struct PrimePower {
    Int prime;
    int exponent;
};

/// Returns (p, alpha) when n = p^alpha with alpha >= 1, otherwise nothing.
std::optional<PrimePower> as_prime_power(Int n);

/// Number of k-element subsets of an n-element set, saturating at INT64_MAX.
Int binomial(Int n, Int k);

}  // namespace lueq

#endif

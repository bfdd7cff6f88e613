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

#include "lueq/arith.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace lueq {

Int gcd_many(std::span<const Int> values) {
    if (values.empty()) {
        throw std::invalid_argument("gcd_many: empty list");
    }
    Int g = 0;
    for (Int v : values) {
        g = gcd(g, v);
    }
    return g;
}

Int gcd_many(std::initializer_list<Int> values) {
    return gcd_many(std::span<const Int>(values.begin(), values.size()));
}

ExtGcd ext_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_x - q * x;
        old_x = x;
        x = tmp;
        tmp = old_y - q * y;
        old_y = y;
        y = tmp;
    }
    if (old_r < 0) {
        return {-old_r, -old_x, -old_y};
    }
    return {old_r, old_x, old_y};
}

bool two_var_congruence_solvable(Int a1, Int a2, Int c, Int m) {
    if (m < 2) {
        throw std::invalid_argument("two_var_congruence_solvable: modulus must be >= 2");
    }
    Int g = gcd_many({a1, a2, m});
    return mod(c, g) == 0;
}

Residue::Residue(Int value, Int modulus) : value_(value), modulus_(modulus) {
    if (modulus < 2) {
        throw std::invalid_argument("Residue: modulus must be >= 2, got " + std::to_string(modulus));
    }
    if (value < 0 || value >= modulus) {
        throw std::invalid_argument(
            "Residue: value " + std::to_string(value) + " outside [0, " + std::to_string(modulus) + ")");
    }
}

std::vector<Int> divisors(Int n) {
    if (n < 1) {
        throw std::invalid_argument("divisors: n must be positive");
    }
    std::vector<Int> small, large;
    for (Int k = 1; k * k <= n; k++) {
        if (n % k == 0) {
            small.push_back(k);
            if (k * k != n) {
                large.push_back(n / k);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::optional<PrimePower> as_prime_power(Int n) {
    if (n < 2) {
        return std::nullopt;
    }
    Int p = n;
    for (Int k = 2; k * k <= n; k++) {
        if (n % k == 0) {
            p = k;
            break;
        }
    }
    int e = 0;
    while (n % p == 0) {
        n /= p;
        e++;
    }
    if (n != 1) {
        return std::nullopt;
    }
    return PrimePower{p, e};
}

Int binomial(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    // Exact: after step i the accumulator is C(n - k + i, i).
    __int128 acc = 1;
    constexpr __int128 cap = std::numeric_limits<Int>::max();
    for (Int i = 1; i <= k; i++) {
        acc = acc * (n - k + i) / i;
        if (acc > cap) {
            return std::numeric_limits<Int>::max();
        }
    }
    return static_cast<Int>(acc);
}

}  // namespace lueq

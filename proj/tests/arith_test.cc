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

#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

using namespace lueq;

namespace {

Int slow_gcd(Int a, Int b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    Int best = 0;
    for (Int k = 1; k <= std::max(a, b); k++) {
        if (a % k == 0 && b % k == 0) {
            best = k;
        }
    }
    return best;
}

}  // namespace

TEST(arith, mod_is_nonnegative) {
    ASSERT_EQ(mod(-1, 6), 5);
    ASSERT_EQ(mod(13, 6), 1);
    ASSERT_EQ(mod(-12, 6), 0);
}

TEST(arith, gcd_many_examples) {
    ASSERT_EQ(gcd_many({12, 30, 72}), 6);
    ASSERT_EQ(gcd_many({0, 0}), 0);
    ASSERT_EQ(gcd_many({3, 4, 30}), 1);
    ASSERT_THROW(gcd_many(std::span<const Int>{}), std::invalid_argument);
}

TEST(arith, gcd_many_matches_pairwise_folding) {
    for (Int a = 0; a < 25; a++) {
        for (Int b = 0; b < 25; b++) {
            for (Int c = 0; c < 25; c += 3) {
                ASSERT_EQ(gcd_many({a, b, c}), slow_gcd(slow_gcd(a, b), c));
            }
        }
    }
}

TEST(arith, ext_gcd_examples) {
    auto r = ext_gcd(1, 0);
    ASSERT_EQ(r.g, 1);
    ASSERT_EQ(r.x, 1);
    ASSERT_EQ(r.y, 0);
    r = ext_gcd(6, 2);
    ASSERT_EQ(r.g, 2);
    ASSERT_EQ(6 * r.x + 2 * r.y, 2);
    r = ext_gcd(72, 12);
    ASSERT_EQ(r.g, 12);
    ASSERT_EQ(72 * r.x + 12 * r.y, 12);
}

TEST(arith, ext_gcd_bezout_identity) {
    for (Int a = -200; a <= 200; a++) {
        for (Int b = -200; b <= 200; b++) {
            auto r = ext_gcd(a, b);
            ASSERT_GE(r.g, 0);
            ASSERT_EQ(r.g, gcd(a, b)) << a << " " << b;
            ASSERT_EQ(a * r.x + b * r.y, r.g) << a << " " << b;
        }
    }
}

TEST(arith, congruence_examples) {
    ASSERT_FALSE(two_var_congruence_solvable(12, 30, 68, 72));
    ASSERT_TRUE(two_var_congruence_solvable(12, 30, 66, 72));
    for (Int c = 0; c < 10; c++) {
        ASSERT_TRUE(two_var_congruence_solvable(1, 0, c, 9));
    }
}

TEST(arith, congruence_matches_exhaustive_search) {
    for (Int m = 2; m <= 40; m++) {
        for (Int a1 = 0; a1 < m; a1 += 3) {
            for (Int a2 = 0; a2 < m; a2 += 5) {
                for (Int c = 0; c < m; c += 2) {
                    bool found = false;
                    for (Int s = 0; s < m && !found; s++) {
                        for (Int t = 0; t < m && !found; t++) {
                            found = mod(a1 * s + a2 * t - c, m) == 0;
                        }
                    }
                    ASSERT_EQ(two_var_congruence_solvable(a1, a2, c, m), found) << a1 << " " << a2 << " " << c << " " << m;
                }
            }
        }
    }
}

TEST(arith, residue_validation) {
    Residue r(5, 6);
    ASSERT_EQ(r.value(), 5);
    ASSERT_EQ(r.modulus(), 6);
    ASSERT_THROW(Residue(6, 6), std::invalid_argument);
    ASSERT_THROW(Residue(-1, 6), std::invalid_argument);
    ASSERT_THROW(Residue(0, 1), std::invalid_argument);
}

TEST(arith, divisors_and_prime_powers) {
    ASSERT_EQ(divisors(12), (std::vector<Int>{1, 2, 3, 4, 6, 12}));
    ASSERT_EQ(divisors(1), (std::vector<Int>{1}));
    for (Int n = 2; n <= 300; n++) {
        std::vector<Int> primes;
        for (Int p = 2; p <= n; p++) {
            if (n % p == 0 && divisors(p).size() == 2) {
                primes.push_back(p);
            }
        }
        auto pp = as_prime_power(n);
        ASSERT_EQ(pp.has_value(), primes.size() == 1) << n;
        if (pp) {
            Int value = 1;
            for (int k = 0; k < pp->exponent; k++) {
                value *= pp->prime;
            }
            ASSERT_EQ(value, n);
        }
    }
    ASSERT_FALSE(as_prime_power(1).has_value());
}

TEST(arith, binomial_values) {
    ASSERT_EQ(binomial(35, 3), 6545);
    ASSERT_EQ(binomial(15, 3), 455);
    ASSERT_EQ(binomial(36, 4), 58905);
    ASSERT_EQ(binomial(5, 0), 1);
    ASSERT_EQ(binomial(5, 7), 0);
    ASSERT_EQ(binomial(10000, 5000), INT64_MAX);
}

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

#include "lueq/clifford.h"

#include <algorithm>
#include <stdexcept>

namespace lueq {

Int Symplectic2::determinant() const {
    return mod(u1 * v2 - u2 * v1, d);
}

Symplectic2 Symplectic2::compose(const Symplectic2 &other) const {
    if (d != other.d) {
        throw std::invalid_argument("Symplectic2::compose: modulus mismatch");
    }
    return {
        mod(u1 * other.u1 + u2 * other.v1, d),
        mod(v1 * other.u1 + v2 * other.v1, d),
        mod(u1 * other.u2 + u2 * other.v2, d),
        mod(v1 * other.u2 + v2 * other.v2, d),
        d,
    };
}

std::string Symplectic2::str() const {
    return "[" + std::to_string(u1) + " " + std::to_string(u2) + "; " + std::to_string(v1) + " " +
           std::to_string(v2) + "]";
}

Gpm apply_symplectic(const Symplectic2 &op, Gpm g) {
    return {mod(op.u1 * g.s + op.u2 * g.t, op.d), mod(op.v1 * g.s + op.v2 * g.t, op.d)};
}

GpmSet apply_symplectic_set(const Symplectic2 &op, const GpmSet &set) {
    if (op.d != set.dimension()) {
        throw std::invalid_argument("apply_symplectic_set: modulus mismatch");
    }
    std::vector<Gpm> out;
    out.reserve(set.size());
    for (const auto &g : set) {
        out.push_back(apply_symplectic(op, g));
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw std::logic_error("apply_symplectic_set: operator " + op.str() + " collapses members of " + set.str());
    }
    return GpmSet::from_canonical(set.dimension(), std::move(out));
}

Symplectic2 clifford_to_z(Gpm g, Int d) {
    g = reduced(g, d);
    if (g.is_identity()) {
        throw std::invalid_argument("clifford_to_z: the identity has no Z image");
    }
    // X^s Z^t -> Z^b with b = gcd(s, t).
    auto [b, p1, q1] = ext_gcd(g.s, g.t);
    Symplectic2 to_z_power{mod(g.t / b, d), mod(p1, d), mod(-g.s / b, d), mod(q1, d), d};
    // Z^b -> Z^a with a = gcd(d, b).
    auto [a, p2, q2] = ext_gcd(d, b);
    Symplectic2 to_divisor{mod(b / a, d), mod(p2, d), mod(-d / a, d), mod(q2, d), d};
    return to_divisor.compose(to_z_power);
}

LocalCliffordContext::LocalCliffordContext(Int a, Int b, Int d) : a_(a), b_(b), d_(d) {
    if (d < 2 || d > kMaxDimension) {
        throw std::invalid_argument("LocalCliffordContext: dimension out of range");
    }
    if (a < 1 || b < 1 || d % a != 0 || d % b != 0) {
        throw std::invalid_argument(
            "LocalCliffordContext: a=" + std::to_string(a) + " and b=" + std::to_string(b) +
            " must be positive divisors of d=" + std::to_string(d));
    }
}

namespace {

void check_ranges(const LocalCliffordContext &ctx, Int u1, Int v1, Int u2, Int v2) {
    Int xr = ctx.x_range(), zr = ctx.z_range();
    if (u1 < 0 || u1 >= xr || v1 < 0 || v1 >= xr || u2 < 0 || u2 >= zr || v2 < 0 || v2 >= zr) {
        throw std::invalid_argument("local Clifford entries out of range");
    }
}

}  // namespace

bool check_local_clifford(const LocalCliffordContext &ctx, Int u1, Int v1, Int u2, Int v2) {
    check_ranges(ctx, u1, v1, u2, v2);
    Int d = ctx.d(), ab = ctx.a() * ctx.b();
    if (gcd_many({u1, v1, ctx.x_range()}) != 1 || gcd_many({u2, v2, ctx.z_range()}) != 1) {
        return false;
    }
    Int det = u1 * v2 - u2 * v1;
    if (mod(det * ab - ab, d) != 0) {
        return false;
    }
    return gcd_many({det, ctx.x_range(), ctx.z_range()}) == 1;
}

bool check_local_clifford_prime_power(const LocalCliffordContext &ctx, Int u1, Int v1, Int u2, Int v2) {
    auto pp = as_prime_power(ctx.d());
    if (!pp) {
        throw std::invalid_argument("check_local_clifford_prime_power: d is not a prime power");
    }
    check_ranges(ctx, u1, v1, u2, v2);
    Int p = pp->prime, d = ctx.d(), a = ctx.a(), b = ctx.b();
    if (a == d && b == d) {
        return true;
    }
    if (a == d) {
        return gcd_many({u2, v2, p}) == 1;
    }
    if (b == d) {
        return gcd_many({u1, v1, p}) == 1;
    }
    if (gcd_many({u1, v1, p}) != 1 || gcd_many({u2, v2, p}) != 1) {
        return false;
    }
    Int det = u1 * v2 - u2 * v1;
    if (a * b < d) {
        // gamma + beta < alpha: the congruence implies det is a unit.
        return mod(det * a * b - a * b, d) == 0;
    }
    // gamma + beta >= alpha: the congruence holds trivially.
    return mod(det, p) != 0;
}

std::vector<Symplectic2> enumerate_local_cliffords(const LocalCliffordContext &ctx) {
    Int xr = ctx.x_range(), zr = ctx.z_range(), d = ctx.d();
    Int ab = ctx.a() * ctx.b();
    std::vector<std::pair<Int, Int>> x_images, z_images;
    for (Int u = 0; u < xr; u++) {
        for (Int v = 0; v < xr; v++) {
            if (gcd_many({u, v, xr}) == 1) {
                x_images.emplace_back(u, v);
            }
        }
    }
    for (Int u = 0; u < zr; u++) {
        for (Int v = 0; v < zr; v++) {
            if (gcd_many({u, v, zr}) == 1) {
                z_images.emplace_back(u, v);
            }
        }
    }
    std::vector<Symplectic2> result;
    for (auto [u1, v1] : x_images) {
        for (auto [u2, v2] : z_images) {
            Int det = u1 * v2 - u2 * v1;
            if (mod(det * ab - ab, d) == 0 && gcd_many({det, xr, zr}) == 1) {
                result.push_back({u1, v1, u2, v2, d});
            }
        }
    }
    return result;
}

std::vector<Int> scaling_permutation(Int u, Int a, Int d) {
    if (a < 1 || d < 1 || d % a != 0) {
        throw std::invalid_argument("scaling_permutation: a must divide d");
    }
    Int blocks = d / a;
    if (gcd(u, blocks) != 1) {
        throw std::invalid_argument(
            "scaling_permutation: u=" + std::to_string(u) + " is not coprime to d/a=" + std::to_string(blocks));
    }
    std::vector<Int> image(static_cast<std::size_t>(d));
    for (Int j = 0; j < blocks; j++) {
        for (Int i = 0; i < a; i++) {
            image[static_cast<std::size_t>(i + j * a)] = i + mod(u * j, blocks) * a;
        }
    }
    return image;
}

}  // namespace lueq

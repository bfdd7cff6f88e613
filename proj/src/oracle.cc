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

#include "lueq/oracle.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "lueq/classify.h"
#include "lueq/clifford.h"

namespace lueq::oracle {

namespace {

constexpr double kTolerance = 1e-9;

void check_dense_dimension(Int d) {
    if (d < 1 || d > kMaxDenseDimension) {
        throw std::invalid_argument("dense dimension must lie in [1, 256], got " + std::to_string(d));
    }
}

std::optional<Int> phase_between(const DenseOperator &lhs, const DenseOperator &rhs, Int d) {
    for (Int c = 0; c < d; c++) {
        if (max_deviation(lhs, rhs.scaled(root_of_unity(c, d))) < kTolerance) {
            return c;
        }
    }
    return std::nullopt;
}

}  // namespace

DenseOperator DenseOperator::identity(Int d) {
    check_dense_dimension(d);
    return {d, Eigen::MatrixXcd::Identity(d, d)};
}

DenseOperator DenseOperator::operator*(const DenseOperator &other) const {
    if (d != other.d) {
        throw std::invalid_argument("DenseOperator: dimension mismatch");
    }
    return {d, m * other.m};
}

DenseOperator DenseOperator::adjoint() const {
    return {d, m.adjoint()};
}

DenseOperator DenseOperator::pow(Int k) const {
    if (k < 0) {
        throw std::invalid_argument("DenseOperator::pow: negative exponent");
    }
    DenseOperator result = identity(d);
    for (Int i = 0; i < k; i++) {
        result = result * *this;
    }
    return result;
}

DenseOperator DenseOperator::scaled(Complex z) const {
    return {d, m * z};
}

double max_deviation(const DenseOperator &a, const DenseOperator &b) {
    if (a.d != b.d) {
        throw std::invalid_argument("max_deviation: dimension mismatch");
    }
    return (a.m - b.m).cwiseAbs().maxCoeff();
}

double unitarity_deviation(const DenseOperator &u) {
    return max_deviation(u * u.adjoint(), DenseOperator::identity(u.d));
}

Complex root_of_unity(Int k, Int d) {
    double angle = 2 * std::numbers::pi * static_cast<double>(mod(k, d)) / static_cast<double>(d);
    return std::polar(1.0, angle);
}

DenseOperator build_gpm_matrix(Gpm g, Int d) {
    check_dense_dimension(d);
    DenseOperator result{d, Eigen::MatrixXcd::Zero(d, d)};
    for (Int j = 0; j < d; j++) {
        result.m(mod(j + g.s, d), j) = root_of_unity(g.t * j, d);
    }
    return result;
}

DenseOperator kron(const DenseOperator &a, const DenseOperator &b) {
    Int d = a.d * b.d;
    check_dense_dimension(d);
    DenseOperator result{d, Eigen::MatrixXcd::Zero(d, d)};
    for (Int r = 0; r < a.d; r++) {
        for (Int c = 0; c < a.d; c++) {
            result.m.block(r * b.d, c * b.d, b.d, b.d) = a.m(r, c) * b.m;
        }
    }
    return result;
}

DenseOperator permutation_matrix(const std::vector<Int> &image) {
    Int d = static_cast<Int>(image.size());
    check_dense_dimension(d);
    DenseOperator result{d, Eigen::MatrixXcd::Zero(d, d)};
    for (Int x = 0; x < d; x++) {
        result.m(image[static_cast<std::size_t>(x)], x) = 1;
    }
    return result;
}

double verify_commutation(Int a, Int b, Int d) {
    DenseOperator xa = build_gpm_matrix({a, 0}, d);
    DenseOperator zb = build_gpm_matrix({0, b}, d);
    return max_deviation(zb * xa, (xa * zb).scaled(root_of_unity(a * b, d)));
}

CheckResult verify_scaling_permutation(Int u, Int a, Int b, Int d) {
    if (a < 1 || b < 1 || d % a != 0 || d % b != 0) {
        throw std::invalid_argument("verify_scaling_permutation: a and b must divide d");
    }
    if (gcd(u, d / a) != 1 || mod(u * a * b - a * b, d) != 0) {
        throw std::invalid_argument("verify_scaling_permutation: need gcd(u, d/a) = 1 and u a b = a b (mod d)");
    }
    DenseOperator w = permutation_matrix(scaling_permutation(u, a, d));
    DenseOperator xa = build_gpm_matrix({a, 0}, d);
    DenseOperator zb = build_gpm_matrix({0, b}, d);
    double dev = std::max(
        max_deviation(w * xa * w.adjoint(), build_gpm_matrix({u * a, 0}, d)),
        max_deviation(w * zb * w.adjoint(), zb));
    dev = std::max(dev, unitarity_deviation(w));
    return {dev < kTolerance, dev};
}

CheckResult verify_tensor_identities(Int n_factor, Int m_factor) {
    if (n_factor < 1 || m_factor < 1) {
        throw std::invalid_argument("verify_tensor_identities: factors must be positive");
    }
    Int d = n_factor * m_factor;
    check_dense_dimension(d);
    DenseOperator diag{m_factor, Eigen::MatrixXcd::Zero(m_factor, m_factor)};
    for (Int i = 0; i < m_factor; i++) {
        diag.m(i, i) = root_of_unity(i, d);
    }
    double dev = max_deviation(
        build_gpm_matrix({m_factor, 0}, d),
        kron(build_gpm_matrix({1, 0}, n_factor), DenseOperator::identity(m_factor)));
    dev = std::max(dev, max_deviation(build_gpm_matrix({0, 1}, d), kron(build_gpm_matrix({0, 1}, n_factor), diag)));
    dev = std::max(
        dev,
        max_deviation(
            build_gpm_matrix({0, n_factor}, d),
            kron(DenseOperator::identity(n_factor), build_gpm_matrix({0, 1}, m_factor))));
    return {dev < 1e-12, dev};
}

std::optional<std::pair<Int, Int>> congruence_scan(Int a1, Int a2, Int c, Int m) {
    if (m < 1) {
        throw std::invalid_argument("congruence_scan: modulus must be positive");
    }
    for (Int s = 0; s < m; s++) {
        for (Int t = 0; t < m; t++) {
            if (mod(a1 * s + a2 * t - c, m) == 0) {
                return std::pair{s, t};
            }
        }
    }
    return std::nullopt;
}

bool verify_scaling_permutation_not_clifford() {
    return !two_var_congruence_solvable(12, 30, 68, 72) && !congruence_scan(12, 30, 68, 72).has_value();
}

bool verify_pair_equivalence(Int u, Int v, Int a, Int b, Int d) {
    if (a < 1 || b < 1 || d % a != 0 || d % b != 0 || b % a != 0 || b >= d) {
        throw std::invalid_argument("verify_pair_equivalence: need a | b | d with b < d");
    }
    if (gcd_many({u, v, d / a}) != 1 || mod(u * a * b - a * b, d) != 0 || gcd_many({u, d / a, d / b}) != 1) {
        throw std::invalid_argument("verify_pair_equivalence: (u, v) violates the hypotheses");
    }
    GpmSet lhs(d, {{0, 0}, {a, 0}, {0, b}});
    GpmSet rhs(d, {{0, 0}, {u * a, v * a}, {0, b}});
    return decide_uc(lhs, rhs);
}

Int numeric_essential_order(Gpm g, Int d) {
    DenseOperator u = build_gpm_matrix(g, d);
    DenseOperator power = u;
    for (Int k = 1; k <= d; k++) {
        Complex zeta = power.m(0, 0);
        if (std::abs(std::abs(zeta) - 1) < kTolerance &&
            max_deviation(power, DenseOperator::identity(d).scaled(zeta)) < kTolerance) {
            return k;
        }
        power = power * u;
    }
    throw std::logic_error("numeric_essential_order: no power up to d is scalar");
}

std::optional<Int> numeric_commutation_exponent(Gpm g1, Gpm g2, Int d) {
    DenseOperator m1 = build_gpm_matrix(g1, d);
    DenseOperator m2 = build_gpm_matrix(g2, d);
    return phase_between(m2 * m1, m1 * m2, d);
}

std::optional<Int> product_phase_exponent(Gpm g1, Gpm g2, Int d) {
    DenseOperator product = build_gpm_matrix(g1, d) * build_gpm_matrix(g2, d);
    return phase_between(product, build_gpm_matrix(multiply(g1, g2, d), d), d);
}

double conjugation_deviation(const DenseOperator &u, Gpm from, Gpm to, Int d) {
    DenseOperator lhs = u * build_gpm_matrix(from, d) * u.adjoint();
    DenseOperator rhs = build_gpm_matrix(to, d);
    Complex phase = (rhs.m.adjoint() * lhs.m).trace() / static_cast<double>(d);
    if (std::abs(phase) < 0.5) {
        return max_deviation(lhs, rhs);
    }
    return max_deviation(lhs, rhs.scaled(phase / std::abs(phase)));
}

namespace {

/// Rescales g so that g^order = I.
DenseOperator with_trivial_power(DenseOperator g, Int order) {
    Complex zeta = g.pow(order).m(0, 0);
    return g.scaled(std::polar(1.0, -std::arg(zeta) / static_cast<double>(order)));
}

}  // namespace

std::optional<DenseOperator> realize_local_clifford(const Symplectic2 &op, const LocalCliffordContext &ctx) {
    Int d = ctx.d(), a = ctx.a(), b = ctx.b();
    check_dense_dimension(d);
    Int order_a = d / a, order_b = d / b;
    DenseOperator gen_a = build_gpm_matrix({a, 0}, d);
    DenseOperator gen_b = build_gpm_matrix({0, b}, d);
    Gpm img_a{op.u1 * a, op.v1 * a}, img_b{op.u2 * b, op.v2 * b};
    DenseOperator tgt_a = with_trivial_power(build_gpm_matrix(img_a, d), order_a);
    DenseOperator tgt_b = with_trivial_power(build_gpm_matrix(img_b, d), order_b);

    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd seed(d, d);
    for (Int r = 0; r < d; r++) {
        for (Int c = 0; c < d; c++) {
            seed(r, c) = Complex(normal(rng), normal(rng));
        }
    }
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
    DenseOperator tgt_ai = DenseOperator::identity(d), gen_ai = DenseOperator::identity(d);
    for (Int i = 0; i < order_a; i++) {
        DenseOperator tgt_w = tgt_ai, gen_w = gen_ai;
        for (Int j = 0; j < order_b; j++) {
            sum += tgt_w.m * seed * gen_w.m.adjoint();
            tgt_w = tgt_w * tgt_b;
            gen_w = gen_w * gen_b;
        }
        tgt_ai = tgt_ai * tgt_a;
        gen_ai = gen_ai * gen_a;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sum, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.singularValues().minCoeff() < 1e-6 * svd.singularValues().maxCoeff()) {
        return std::nullopt;
    }
    DenseOperator u{d, svd.matrixU() * svd.matrixV().adjoint()};
    double dev = std::max(conjugation_deviation(u, {a, 0}, img_a, d), conjugation_deviation(u, {0, b}, img_b, d));
    if (dev > kTolerance || unitarity_deviation(u) > kTolerance) {
        return std::nullopt;
    }
    return u;
}

}  // namespace lueq::oracle

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

#ifndef LUEQ_ORACLE_H
#define LUEQ_ORACLE_H

#include <complex>
#include <optional>
#include <utility>

#include <Eigen/Dense>

#include "lueq/arith.h"
#include "lueq/clifford.h"
#include "lueq/gpm.h"

namespace lueq::oracle {

/// Largest dimension for which dense matrices are built.
constexpr Int kMaxDenseDimension = 256;

using Complex = std::complex<double>;

/// A d x d complex matrix.
struct DenseOperator {
    Int d = 0;
    Eigen::MatrixXcd m;

    static DenseOperator identity(Int d);

    DenseOperator operator*(const DenseOperator &other) const;
    DenseOperator adjoint() const;
    DenseOperator pow(Int k) const;
    DenseOperator scaled(Complex z) const;
};

/// Largest entrywise |a - b|.
double max_deviation(const DenseOperator &a, const DenseOperator &b);

/// max |U U^dagger - I|.
double unitarity_deviation(const DenseOperator &u);

/// exp(2 pi i k / d), with k reduced mod d before the angle is formed.
Complex root_of_unity(Int k, Int d);

/// Entry w^{t j} at row (j + s mod d), column j. Throws
/// std::invalid_argument unless 1 <= d <= 256.
DenseOperator build_gpm_matrix(Gpm g, Int d);

/// Kronecker product a (x) b.
DenseOperator kron(const DenseOperator &a, const DenseOperator &b);

/// The permutation matrix sending |x> to |image[x]>.
DenseOperator permutation_matrix(const std::vector<Int> &image);

/// max |Z^b X^a - w^{ab} X^a Z^b|.
double verify_commutation(Int a, Int b, Int d);

struct CheckResult {
    bool passed = false;
    double deviation = 0;
};

/// Builds W from scaling_permutation and checks W X^a W^dagger = X^{ua} and
/// W Z^b W^dagger = Z^b. Throws std::invalid_argument unless gcd(u, d/a) = 1
/// and u a b = a b (mod d).
CheckResult verify_scaling_permutation(Int u, Int a, Int b, Int d);

/// For d = n m with basis |i + m j> = |j> (x) |i>, checks
///   X_d^m = X_n (x) I_m,
///   Z_d = Z_n (x) diag(w_d^i),
///   Z_d^n = I_n (x) Z_m.
/// Throws std::invalid_argument unless 1 <= n m <= 256.
CheckResult verify_tensor_identities(Int n_factor, Int m_factor);

/// First (s, t) in Z_m^2 with a1 s + a2 t = c (mod m), by exhaustive scan.
std::optional<std::pair<Int, Int>> congruence_scan(Int a1, Int a2, Int c, Int m);

/// The scaling permutation with u = 5, a = 6, d = 72 is not a Clifford
/// operator: 12 s + 30 t = 68 (mod 72) has no solution, by gcd and by scan.
bool verify_scaling_permutation_not_clifford();

/// Decides {I, X^a, Z^b} against {I, X^{ua} Z^{va}, Z^b} with the
/// classifier. Throws std::invalid_argument unless a | b, b < d,
/// gcd(u, v, d/a) = 1, u a b = a b (mod d) and gcd(u, d/a, d/b) = 1.
bool verify_pair_equivalence(Int u, Int v, Int a, Int b, Int d);

/// Smallest k >= 1 with U^k = zeta I for a unit scalar zeta.
Int numeric_essential_order(Gpm g, Int d);

/// The c in [0, d) with M(g2) M(g1) = w^c M(g1) M(g2), if any.
std::optional<Int> numeric_commutation_exponent(Gpm g1, Gpm g2, Int d);

/// The k in [0, d) with M(g1) M(g2) = w^k M(g1 g2), if any.
std::optional<Int> product_phase_exponent(Gpm g1, Gpm g2, Int d);

/// Max deviation of U M(from) U^dagger from the nearest unit multiple of
/// M(to).
double conjugation_deviation(const DenseOperator &u, Gpm from, Gpm to, Int d);

/// A unitary U with U X^a U^dagger ~ X^{u1 a} Z^{v1 a} and
/// U Z^b U^dagger ~ X^{u2 b} Z^{v2 b}, built by averaging a fixed random
/// matrix over the group generated by X^a and Z^b and taking the unitary
/// polar factor. Returns nothing when the average is singular or the
/// result fails either conjugation to 1e-9, which happens for operators
/// that are not local Clifford operators of the pair.
std::optional<DenseOperator> realize_local_clifford(const Symplectic2 &op, const LocalCliffordContext &ctx);

}  // namespace lueq::oracle

#endif

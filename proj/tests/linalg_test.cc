// Copyright 2026 The cvtele Authors
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

#include "cvtele/linalg.h"

#include <cmath>
#include <random>

#include "cvtele/noise.h"
#include "gtest/gtest.h"
#include "test_oracles.h"

using namespace cvtele;

TEST(linalg, eigenvalues_identity_and_diagonal) {
    for (double v : hermitian_eigenvalues(CMatrix::identity(9))) EXPECT_NEAR(v, 1.0, 1e-14);
    const auto eig = hermitian_eigenvalues(CMatrix::diagonal({3.0, 1.0, 2.0}));
    ASSERT_EQ(eig.size(), 3u);
    EXPECT_NEAR(eig[0], 1.0, 1e-14);
    EXPECT_NEAR(eig[1], 2.0, 1e-14);
    EXPECT_NEAR(eig[2], 3.0, 1e-14);
}

TEST(linalg, eigenvalues_complex_two_by_two) {
    // [[1, i], [-i, 1]] has eigenvalues 0 and 2.
    const CMatrix m{{1.0, Complex(0, 1)}, {Complex(0, -1), 1.0}};
    const auto eig = hermitian_eigenvalues(m);
    EXPECT_NEAR(eig[0], 0.0, 1e-14);
    EXPECT_NEAR(eig[1], 2.0, 1e-14);
}

TEST(linalg, partial_transpose_of_maximally_entangled_pair) {
    // PT(|Φ><Φ|) is SWAP/3: six eigenvalues +1/3, three -1/3.
    const auto eig = hermitian_eigenvalues(partial_transpose_first(maximally_entangled_qutrits(), 3, 3));
    ASSERT_EQ(eig.size(), 9u);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(eig[i], -1.0 / 3.0, 1e-12);
    for (int i = 3; i < 9; ++i) EXPECT_NEAR(eig[i], 1.0 / 3.0, 1e-12);
    double sum = 0.0;
    for (double v : eig) sum += std::abs(v);
    EXPECT_NEAR(sum, 3.0, 1e-12);
}

TEST(linalg, eigen_invariants_on_random_hermitian) {
    // Trace and Frobenius norm are similarity invariants: Σλ = tr M, Σλ² = ||M||_F².
    std::mt19937 rng(11);
    for (std::size_t n : {1u, 2u, 5u, 9u, 16u, 33u}) {
        const CMatrix m = ref::random_hermitian(rng, n);
        const auto eig = hermitian_eigenvalues(m);
        double sum = 0.0;
        double sq = 0.0;
        for (double v : eig) {
            sum += v;
            sq += v * v;
        }
        double frob = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) frob += std::norm(m(i, j));
        }
        EXPECT_NEAR(sum, m.trace().real(), 1e-10 * n);
        EXPECT_NEAR(sq, frob, 1e-10 * n);
        EXPECT_TRUE(std::is_sorted(eig.begin(), eig.end()));
        // Rayleigh bounds: λ_min <= M_ii <= λ_max.
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_LE(eig.front(), m(i, i).real() + 1e-10);
            EXPECT_GE(eig.back(), m(i, i).real() - 1e-10);
        }
    }
}

TEST(linalg, eigenvalues_of_unitary_conjugated_diagonal) {
    std::mt19937 rng(3);
    const std::vector<Complex> spectrum{-2.0, -0.5, 0.0, 0.25, 1.0, 4.0};
    // Q from Gram-Schmidt on a random matrix.
    CMatrix a = ref::random_matrix(rng, 6, 6);
    CMatrix q(6, 6);
    for (std::size_t c = 0; c < 6; ++c) {
        std::vector<Complex> v(6);
        for (std::size_t r = 0; r < 6; ++r) v[r] = a(r, c);
        for (std::size_t p = 0; p < c; ++p) {
            Complex dot = 0.0;
            for (std::size_t r = 0; r < 6; ++r) dot += std::conj(q(r, p)) * v[r];
            for (std::size_t r = 0; r < 6; ++r) v[r] -= dot * q(r, p);
        }
        double norm = 0.0;
        for (const auto &x : v) norm += std::norm(x);
        for (std::size_t r = 0; r < 6; ++r) q(r, c) = v[r] / std::sqrt(norm);
    }
    const CMatrix m = q * CMatrix::diagonal(spectrum) * q.adjoint();
    const auto eig = hermitian_eigenvalues(m);
    for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(eig[i], spectrum[i].real(), 1e-10);
}

TEST(linalg, eigenvalue_errors) {
    EXPECT_THROW(hermitian_eigenvalues(CMatrix(2, 3)), std::invalid_argument);
    EXPECT_THROW(hermitian_eigenvalues(CMatrix::identity(65)), std::invalid_argument);
    CMatrix m = CMatrix::identity(3);
    m(0, 2) = 1e-6;
    EXPECT_THROW(hermitian_eigenvalues(m), std::invalid_argument);
}

TEST(linalg, partial_transpose_is_involution) {
    std::mt19937 rng(5);
    const CMatrix m = ref::random_matrix(rng, 9, 9);
    EXPECT_EQ(partial_transpose_first(partial_transpose_first(m, 3, 3), 3, 3), m);
    const CMatrix r = ref::random_matrix(rng, 6, 6);
    EXPECT_EQ(partial_transpose_first(partial_transpose_first(r, 2, 3), 2, 3), r);
}

TEST(linalg, partial_transpose_of_product_state) {
    // (A ⊗ B)^{T_A} = A^T ⊗ B.
    std::mt19937 rng(9);
    const CMatrix a = ref::random_matrix(rng, 2, 2);
    const CMatrix b = ref::random_matrix(rng, 3, 3);
    EXPECT_LT(max_abs_diff(partial_transpose_first(kron(a, b), 2, 3), kron(a.transpose(), b)), 1e-15);
}

TEST(linalg, matrix_algebra) {
    const CMatrix a{{1.0, 2.0}, {3.0, 4.0}};
    const CMatrix b{{0.0, 1.0}, {1.0, 0.0}};
    EXPECT_EQ(a * b, (CMatrix{{2.0, 1.0}, {4.0, 3.0}}));
    EXPECT_EQ(a.trace(), Complex{5.0});
    EXPECT_EQ(a.transpose(), (CMatrix{{1.0, 3.0}, {2.0, 4.0}}));
    const CMatrix c{{Complex(0, 1), 0.0}, {0.0, 1.0}};
    EXPECT_EQ(c.adjoint(), (CMatrix{{Complex(0, -1), 0.0}, {0.0, 1.0}}));
    EXPECT_THROW(a * CMatrix(3, 3), std::invalid_argument);
    EXPECT_DOUBLE_EQ(hermiticity_defect(a), 1.0);
}

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

#ifndef CVTELE_LINALG_H
#define CVTELE_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace cvtele {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Sized for the small operators used here
/// (qutrit Kraus maps, 9x9 two-qutrit states, (2N+1)-square output densities).
class CMatrix {
   public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(const std::vector<Complex> &diag);
    static CMatrix outer(const std::vector<Complex> &u, const std::vector<Complex> &v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    CMatrix adjoint() const;
    CMatrix transpose() const;
    Complex trace() const;

    CMatrix &operator+=(const CMatrix &other);
    CMatrix &operator-=(const CMatrix &other);
    CMatrix &operator*=(Complex scale);

    friend CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
    friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(const CMatrix &a, const CMatrix &b);

    bool operator==(const CMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Kronecker product a ⊗ b.
CMatrix kron(const CMatrix &a, const CMatrix &b);

/// Largest elementwise |a_ij - b_ij|. Shapes must agree.
double max_abs_diff(const CMatrix &a, const CMatrix &b);

/// Largest |M_ij - conj(M_ji)|.
double hermiticity_defect(const CMatrix &m);

bool is_hermitian(const CMatrix &m, double tol);

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// Cyclic Jacobi on the real symmetric 2n x 2n embedding [[Re, -Im], [Im, Re]];
/// every eigenvalue of the embedding appears twice and one copy of each pair
/// is returned. Sweeps stop once the off-diagonal Frobenius norm drops below
/// 1e-13 (relative to max(1, ||M||_F)). Throws std::invalid_argument for
/// non-square, oversized (n > 64) or non-Hermitian input (defect > 1e-10),
/// and std::runtime_error if 100 sweeps do not converge.
std::vector<double> hermitian_eigenvalues(const CMatrix &m);

/// Σ|λ_i| of a Hermitian matrix.
double trace_norm(const CMatrix &m);

/// Partial transpose over the first factor of a (dim_a*dim_b)-square matrix in
/// the row-major pairing |ij> -> i*dim_b + j.
CMatrix partial_transpose_first(const CMatrix &m, std::size_t dim_a, std::size_t dim_b);

}  // namespace cvtele

#endif  // CVTELE_LINALG_H

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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cvtele {

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("CMatrix: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(const std::vector<Complex> &diag) {
    CMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

CMatrix CMatrix::outer(const std::vector<Complex> &u, const std::vector<Complex> &v) {
    CMatrix m(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    }
    return out;
}

CMatrix CMatrix::transpose() const {
    CMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

Complex CMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

CMatrix &CMatrix::operator+=(const CMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("CMatrix: shape mismatch in +");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("CMatrix: shape mismatch in -");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

CMatrix &CMatrix::operator*=(Complex scale) {
    for (auto &x : data_) x *= scale;
    return *this;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("CMatrix: shape mismatch in *");
    CMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("max_abs_diff: shape mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    }
    return worst;
}

double hermiticity_defect(const CMatrix &m) {
    if (!m.is_square()) throw std::invalid_argument("hermiticity_defect: matrix is not square");
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i; j < m.cols(); ++j) worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
    return worst;
}

bool is_hermitian(const CMatrix &m, double tol) { return m.is_square() && hermiticity_defect(m) <= tol; }

namespace {

constexpr std::size_t kMaxEigenDim = 64;
constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTol = 1e-13;

// Symmetric n x n real matrix stored row-major.
struct RealSym {
    std::size_t n;
    std::vector<double> a;
    double &at(std::size_t i, std::size_t j) { return a[i * n + j]; }
};

double off_diagonal_norm(RealSym &s) {
    double sum = 0.0;
    for (std::size_t i = 0; i < s.n; ++i) {
        for (std::size_t j = 0; j < s.n; ++j) {
            if (i != j) sum += s.at(i, j) * s.at(i, j);
        }
    }
    return std::sqrt(sum);
}

void rotate(RealSym &s, std::size_t p, std::size_t q) {
    const double apq = s.at(p, q);
    if (apq == 0.0) return;
    const double app = s.at(p, p);
    const double aqq = s.at(q, q);
    const double theta = (aqq - app) / (2.0 * apq);
    const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double sn = t * c;
    for (std::size_t k = 0; k < s.n; ++k) {
        const double akp = s.at(k, p);
        const double akq = s.at(k, q);
        s.at(k, p) = c * akp - sn * akq;
        s.at(k, q) = sn * akp + c * akq;
    }
    for (std::size_t k = 0; k < s.n; ++k) {
        const double apk = s.at(p, k);
        const double aqk = s.at(q, k);
        s.at(p, k) = c * apk - sn * aqk;
        s.at(q, k) = sn * apk + c * aqk;
    }
    s.at(p, q) = 0.0;
    s.at(q, p) = 0.0;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const CMatrix &m) {
    if (!m.is_square()) throw std::invalid_argument("hermitian_eigenvalues: matrix is not square");
    const std::size_t n = m.rows();
    if (n > kMaxEigenDim) throw std::invalid_argument("hermitian_eigenvalues: dimension exceeds 64");
    if (hermiticity_defect(m) > 1e-10) throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
    if (n == 0) return {};

    RealSym s{2 * n, std::vector<double>(4 * n * n)};
    double frob = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // Symmetrize so the embedding is exactly symmetric.
            const Complex h = 0.5 * (m(i, j) + std::conj(m(j, i)));
            s.at(i, j) = h.real();
            s.at(n + i, n + j) = h.real();
            s.at(i, n + j) = -h.imag();
            s.at(n + i, j) = h.imag();
            frob += std::norm(h);
        }
    }
    const double tol = kOffDiagonalTol * std::max(1.0, std::sqrt(frob));

    int sweep = 0;
    while (off_diagonal_norm(s) >= tol) {
        if (++sweep > kMaxSweeps) throw std::runtime_error("hermitian_eigenvalues: Jacobi did not converge");
        for (std::size_t p = 0; p + 1 < s.n; ++p) {
            for (std::size_t q = p + 1; q < s.n; ++q) rotate(s, p, q);
        }
    }

    std::vector<double> doubled(s.n);
    for (std::size_t i = 0; i < s.n; ++i) doubled[i] = s.at(i, i);
    std::sort(doubled.begin(), doubled.end());
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    return eig;
}

double trace_norm(const CMatrix &m) {
    double sum = 0.0;
    for (double v : hermitian_eigenvalues(m)) sum += std::abs(v);
    return sum;
}

CMatrix partial_transpose_first(const CMatrix &m, std::size_t dim_a, std::size_t dim_b) {
    if (m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b) {
        throw std::invalid_argument("partial_transpose_first: dimension mismatch");
    }
    CMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < dim_a; ++i) {
        for (std::size_t j = 0; j < dim_b; ++j) {
            for (std::size_t k = 0; k < dim_a; ++k) {
                for (std::size_t l = 0; l < dim_b; ++l) {
                    out(k * dim_b + j, i * dim_b + l) = m(i * dim_b + j, k * dim_b + l);
                }
            }
        }
    }
    return out;
}

}  // namespace cvtele

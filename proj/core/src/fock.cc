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

#include "cvtele/fock.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cvtele {

FockVector::FockVector(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("FockVector: needs at least the vacuum amplitude");
}

FockVector FockVector::vacuum(std::size_t cutoff) {
    std::vector<Complex> c(cutoff + 1);
    c[0] = 1.0;
    return FockVector(std::move(c));
}

double FockVector::norm_squared() const {
    double s = 0.0;
    for (const auto &c : coeffs_) s += std::norm(c);
    return s;
}

double SchmidtDiagonalState::norm_squared() const {
    double s = 0.0;
    for (double c : coeffs) s += c * c;
    return s;
}

FockVector coherent(Complex alpha, std::size_t cutoff) {
    std::vector<Complex> c(cutoff + 1);
    // Running term α^m / sqrt(m!).
    Complex term = std::exp(-0.5 * std::norm(alpha));
    c[0] = term;
    for (std::size_t m = 1; m <= cutoff; ++m) {
        term *= alpha / std::sqrt(static_cast<double>(m));
        c[m] = term;
    }
    return FockVector(std::move(c));
}

FockVector cat(double alpha, std::size_t cutoff) {
    const double a2 = alpha * alpha;
    const double scale = 2.0 / std::sqrt(2.0 + 2.0 * std::exp(-2.0 * a2));
    std::vector<Complex> c(cutoff + 1);
    double term = std::exp(-0.5 * a2);
    c[0] = scale * term;
    for (std::size_t m = 1; m <= cutoff; ++m) {
        term *= alpha / std::sqrt(static_cast<double>(m));
        if (m % 2 == 0) c[m] = scale * term;
    }
    return FockVector(std::move(c));
}

FockVector squeezed_vacuum(double xi, std::size_t cutoff) {
    if (!(std::abs(xi) < 1.0)) throw std::domain_error("squeezed_vacuum: |xi| must be < 1");
    std::vector<Complex> c(cutoff + 1);
    // coeff_{2n} = (1-ξ²)^{1/4} (-1)^n sqrt((2n)!)/(2^n n!) ξ^n, built by the ratio
    // coeff_{2n+2}/coeff_{2n} = -ξ sqrt((2n+1)(2n+2)) / (2(n+1)).
    double term = std::pow(1.0 - xi * xi, 0.25);
    c[0] = term;
    for (std::size_t n = 0; 2 * n + 2 <= cutoff; ++n) {
        const double k = static_cast<double>(n);
        term *= -xi * std::sqrt((2 * k + 1) * (2 * k + 2)) / (2 * (k + 1));
        c[2 * n + 2] = term;
    }
    return FockVector(std::move(c));
}

SchmidtDiagonalState tmsv(double lambda, std::size_t cutoff) {
    if (!(std::abs(lambda) < 1.0)) throw std::domain_error("tmsv: |lambda| must be < 1");
    SchmidtDiagonalState s;
    s.coeffs.resize(cutoff + 1);
    double term = std::sqrt(1.0 - lambda * lambda);
    for (std::size_t n = 0; n <= cutoff; ++n) {
        s.coeffs[n] = term;
        term *= lambda;
    }
    return s;
}

Complex inner(const FockVector &u, const FockVector &v) {
    Complex s = 0.0;
    const std::size_t n = std::min(u.size(), v.size());
    for (std::size_t m = 0; m < n; ++m) s += std::conj(u[m]) * v[m];
    return s;
}

double expectation(const CMatrix &rho, const FockVector &psi) {
    if (!is_hermitian(rho, 1e-10)) throw std::invalid_argument("expectation: density matrix is not Hermitian");
    const std::size_t n = std::min(rho.rows(), psi.size());
    Complex s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Complex row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += rho(i, j) * psi[j];
        s += std::conj(psi[i]) * row;
    }
    if (std::abs(s.imag()) >= 1e-10) throw std::runtime_error("expectation: non-negligible imaginary part");
    return s.real();
}

std::size_t default_cutoff(double alpha_abs, std::size_t min_cutoff) {
    const auto poisson = static_cast<std::size_t>(std::ceil(alpha_abs * alpha_abs + 8.0 * alpha_abs + 10.0));
    return std::max(min_cutoff, poisson);
}

}  // namespace cvtele

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

#ifndef CVTELE_FOCK_H
#define CVTELE_FOCK_H

#include <cstddef>
#include <vector>

#include "cvtele/linalg.h"

namespace cvtele {

/// Single-mode pure state in the photon-number basis, amplitudes 0..cutoff.
/// Generators do not renormalize after truncation.
class FockVector {
   public:
    FockVector() : coeffs_(1, Complex{0.0}) {}
    explicit FockVector(std::vector<Complex> coeffs);

    static FockVector vacuum(std::size_t cutoff);

    std::size_t cutoff() const { return coeffs_.size() - 1; }
    std::size_t size() const { return coeffs_.size(); }

    /// Amplitude of |m>; zero above the cutoff.
    Complex operator[](std::size_t m) const { return m < coeffs_.size() ? coeffs_[m] : Complex{0.0}; }
    const std::vector<Complex> &coeffs() const { return coeffs_; }

    double norm_squared() const;

    bool operator==(const FockVector &) const = default;

   private:
    std::vector<Complex> coeffs_;
};

/// Real diagonal two-mode expansion Σ c_n |n,n>.
struct SchmidtDiagonalState {
    std::vector<double> coeffs;

    std::size_t cutoff() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    double norm_squared() const;
};

FockVector coherent(Complex alpha, std::size_t cutoff);

/// Even cat (|α> + |-α>) / sqrt(2 + 2 exp(-2α²)).
FockVector cat(double alpha, std::size_t cutoff);

/// Throws std::domain_error for |xi| >= 1.
FockVector squeezed_vacuum(double xi, std::size_t cutoff);

/// Two-mode squeezed vacuum, c_n = sqrt(1 - λ²) λ^n. Throws std::domain_error for |λ| >= 1.
SchmidtDiagonalState tmsv(double lambda, std::size_t cutoff);

/// Σ conj(u_m) v_m, the shorter vector zero-padded.
Complex inner(const FockVector &u, const FockVector &v);

/// <ψ|ρ|ψ>. ρ must be Hermitian within 1e-10 (std::invalid_argument otherwise);
/// entries beyond either dimension are treated as zero.
double expectation(const CMatrix &rho, const FockVector &psi);

/// Fock cutoff that leaves a Poisson tail below 1e-12 for amplitude |α|, and
/// never below `min_cutoff`.
std::size_t default_cutoff(double alpha_abs, std::size_t min_cutoff);

}  // namespace cvtele

#endif  // CVTELE_FOCK_H

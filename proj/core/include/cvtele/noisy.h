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

#ifndef CVTELE_NOISY_H
#define CVTELE_NOISY_H

#include "cvtele/ideal.h"
#include "cvtele/linalg.h"
#include "cvtele/noise.h"

namespace cvtele {

/// Unnormalized qutrit density matrix carried by one teleporter arm.
struct ArmState {
    CMatrix rho;
    Complex alpha_per_arm;
    int arms = 1;
};

/// Unnormalized output-port density matrix D over photon numbers 0..2N.
struct OutputDensity {
    CMatrix density;
    double success_probability = 0.0;
    int arms = 1;

    /// D / Ps. Throws NoSuccessfulBranch if Ps underflows.
    CMatrix normalized() const;
};

/// |t><t| with t_n = exp(-|α|²/(2N)) (α/sqrt(N))^n / sqrt(n!) for n = 0, 1, 2.
ArmState arm_input(Complex alpha, int arms);

ArmState arm_output(const ArmState &arm, const KrausSet &kraus);

/// Recombines N identical arms and projects the other N-1 splitter ports on
/// vacuum:
///   D_pq = sqrt(p! q!) (B^{*N})_pq,  B_nm = ρ_nm / (sqrt(n! m!) N^{(n+m)/2}),
/// where B^{*N} is the N-fold two-index convolution power of B.
OutputDensity recombine(const ArmState &arm, int arms);

/// Success probability tr D and fidelity <α|D|α>/tr D of a coherent input
/// teleported through N noisy qutrit arms. Throws NoSuccessfulBranch when
/// tr D < 1e-300.
Metrics noisy_metrics(Complex alpha, int arms, const KrausSet &kraus);
Metrics noisy_metrics(Complex alpha, int arms, NoiseKind kind, double p_noise);

}  // namespace cvtele

#endif  // CVTELE_NOISY_H

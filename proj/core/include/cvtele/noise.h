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

#ifndef CVTELE_NOISE_H
#define CVTELE_NOISE_H

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "cvtele/linalg.h"

namespace cvtele {

enum class NoiseKind { kBitFlip, kPhaseFlip, kDepolarizing };

inline constexpr std::array<NoiseKind, 3> kAllNoiseKinds = {NoiseKind::kBitFlip, NoiseKind::kPhaseFlip,
                                                            NoiseKind::kDepolarizing};

/// "bit_flip", "phase_flip", "depolarizing".
std::string_view to_string(NoiseKind kind);
/// Inverse of to_string; throws std::invalid_argument for unknown names.
NoiseKind parse_noise_kind(std::string_view name);

/// One noise model at probability p_noise, stored as a mixture of qutrit
/// unitaries: ρ -> Σ w_i U_i ρ U_i†. The Kraus operators are sqrt(w_i) U_i.
/// Keeping the weights unsquared makes vacuum-preserving channels exactly
/// trace preserving on |0><0|.
struct KrausSet {
    NoiseKind kind = NoiseKind::kBitFlip;
    double p_noise = 0.0;
    std::vector<double> weights;
    std::vector<CMatrix> unitaries;

    std::vector<CMatrix> operators() const;
    /// Σ K_i† K_i.
    CMatrix completeness() const;
};

/// Bit flip: sqrt(1-p) 1 plus sqrt(p/2) times the two cyclic shifts.
/// Phase flip: sqrt(1-p) 1, sqrt(p/2) diag(1,-1,1), sqrt(p/2) diag(1,1,-1).
/// Depolarizing: sqrt(1-p) 1 and sqrt(p/8) times the eight non-identity
/// products D1^a D2^b of the shift D1 and clock D2 = diag(1, ω, ω²), ω = e^{2πi/3}.
/// Throws std::domain_error unless 0 <= p_noise <= 1.
KrausSet kraus_set(NoiseKind kind, double p_noise);

/// Σ_i K_i ρ K_i†. Linear; ρ need not be normalized or Hermitian.
CMatrix apply_channel(const CMatrix &rho, const KrausSet &kraus);

/// Maximally entangled qutrit pair (|00> + |11> + |22>)/sqrt(3) as a 9x9
/// density matrix in the |ij> -> 3i + j basis.
CMatrix maximally_entangled_qutrits();

/// Resource shared by one teleporter after the noise acts on the receiver
/// qutrit: Σ_i (1 ⊗ K_i) |Φ><Φ| (1 ⊗ K_i)†.
CMatrix effective_resource(const KrausSet &kraus);
CMatrix effective_resource(NoiseKind kind, double p_noise);

/// log2 of the trace norm of the partial transpose of a two-qutrit state.
double log_negativity(const CMatrix &two_qutrit_state);
double log_negativity(NoiseKind kind, double p_noise);

}  // namespace cvtele

#endif  // CVTELE_NOISE_H

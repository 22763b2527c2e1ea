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

#ifndef CVTELE_IDEAL_H
#define CVTELE_IDEAL_H

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cvtele/fock.h"

namespace cvtele {

/// Raised when no amplitude survives the teleporter photon window.
class NoSuccessfulBranch : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Per-photon-number weights A_0..A_{max_photons} by which |m> survives the
/// split / teleport / recombine pipeline with N arms.
struct TransferProfile {
    int arms = 1;
    int channel_dim = 3;
    std::vector<double> weights;

    /// 2N for qutrit arms, N for qubit arms.
    std::size_t max_photons() const { return weights.size() - 1; }
    /// A_m, zero beyond max_photons().
    double operator[](std::size_t m) const { return m < weights.size() ? weights[m] : 0.0; }
};

inline constexpr int kMaxArms = 64;

/// Qutrit arms (each arm keeps 0, 1 or 2 photons):
///   A_m = (m!/N^m) N! Σ_k 2^{-k} / (k! (m-2k)! (N-m+k)!),  k = max(0, m-N)..floor(m/2).
/// Throws std::out_of_range unless 1 <= N <= 64.
TransferProfile transfer_profile_qutrit(int arms);

/// Qubit arms (each arm keeps 0 or 1 photon): A_m = N! / ((N-m)! N^m).
TransferProfile transfer_profile_qubit(int arms);

/// The qutrit sum without the 2^{-k} multinomial weight. Kept only so the
/// verify report can show that this form disagrees with the brute-force
/// interferometer; it is not a physical profile (A_2 = 2 at N = 1).
TransferProfile transfer_profile_qutrit_unweighted(int arms);

struct PureTeleportResult {
    FockVector output;     // normalized teleported state
    FockVector amplitudes; // unnormalized o_m = input_m A_m, 0..max_photons
    double success_probability = 0.0;
    double fidelity = 0.0;
};

/// Teleports a single-mode pure state through the ideal profile. Throws
/// NoSuccessfulBranch when the input has no support on 0..max_photons.
PureTeleportResult teleport_pure(const FockVector &input, const TransferProfile &profile);

struct Metrics {
    double success_probability = 0.0;
    double fidelity = 0.0;
};

/// Teleports one mode of a TMSV; the partner mode is left untouched.
Metrics teleport_tmsv(double lambda, const TransferProfile &profile);

}  // namespace cvtele

#endif  // CVTELE_IDEAL_H

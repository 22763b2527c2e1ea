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

#ifndef CVTELE_ORACLE_H
#define CVTELE_ORACLE_H

// Brute-force multimode Fock-space simulation of the split / teleport /
// recombine interferometer. Exponential in the number of modes; used as the
// ground truth for the closed-form modules at small N.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cvtele/fock.h"
#include "cvtele/linalg.h"
#include "cvtele/noise.h"

namespace cvtele::oracle {

/// Photon numbers (n_1, ..., n_N) of the N modes.
using Occupation = std::vector<int>;

inline constexpr double kPruneThreshold = 1e-16;

int total_photons(const Occupation &occ);

/// Sparse pure state over multimode occupation tuples, every stored tuple
/// holding at most photon_cap photons in total.
class MultimodeState {
   public:
    MultimodeState(int modes, int photon_cap);

    int modes() const { return modes_; }
    int photon_cap() const { return photon_cap_; }
    const std::map<Occupation, Complex> &amplitudes() const { return amplitudes_; }

    /// Accumulates amplitude onto |occ>. Throws std::length_error when occ
    /// exceeds the photon cap and std::invalid_argument on a mode-count mismatch.
    void add(const Occupation &occ, Complex amplitude);
    Complex amplitude(const Occupation &occ) const;
    double norm_squared() const;
    /// Drops entries with magnitude below `threshold`.
    void prune(double threshold = kPruneThreshold);

   private:
    int modes_;
    int photon_cap_;
    std::map<Occupation, Complex> amplitudes_;
};

/// Sparse density matrix over pairs of occupation tuples.
class MultimodeDensity {
   public:
    using Key = std::pair<Occupation, Occupation>;

    MultimodeDensity(int modes, int photon_cap);
    static MultimodeDensity from_pure(const MultimodeState &state);

    int modes() const { return modes_; }
    int photon_cap() const { return photon_cap_; }
    const std::map<Key, Complex> &entries() const { return entries_; }

    void add(const Occupation &ket, const Occupation &bra, Complex value);
    Complex trace() const;
    /// Largest |ρ(k,b) - conj(ρ(b,k))| over stored pairs.
    double hermiticity_defect() const;
    void prune(double threshold = kPruneThreshold);

   private:
    int modes_;
    int photon_cap_;
    std::map<Key, Complex> entries_;
};

/// Discrete Fourier transform U_jk = exp(2πi jk/N)/sqrt(N); first row and
/// column are uniform.
CMatrix splitter_matrix(int modes);

/// A unitary whose first column (and first row, up to conjugation) is the unit
/// vector `first_column`, built from a Householder reflection. Used to show the
/// output depends only on that column.
CMatrix householder_completion(const std::vector<Complex> &first_column);

/// Linear-optical transform a_i† -> Σ_j U_ji b_j† applied to every ket.
MultimodeState apply_splitter(const MultimodeState &state, const CMatrix &unitary);
/// ρ -> Û ρ Û† for the same transform.
MultimodeDensity apply_splitter(const MultimodeDensity &rho, const CMatrix &unitary);

/// Keeps only tuples whose every mode holds <= per_mode_cap photons.
MultimodeState truncate_per_mode(const MultimodeState &state, int per_mode_cap);

/// Σ_i K_i ρ K_i† with K_i acting on `mode`. Every stored occupation of that
/// mode must be <= 2.
MultimodeDensity apply_local_channel(const MultimodeDensity &rho, int mode, const KrausSet &kraus);

/// Mode-0 amplitudes 0..max_photons of the branch where modes 1..N-1 are empty.
FockVector project_onto_first_mode(const MultimodeState &state, int max_photons);
/// Mode-0 density matrix (unnormalized) of the branch where modes 1..N-1 are empty.
CMatrix project_onto_first_mode(const MultimodeDensity &rho, int max_photons);

struct IdealOracleResult {
    FockVector amplitudes;  // unnormalized output-port amplitudes, 0..N*per_arm_cutoff
    double success_probability = 0.0;
};

/// Input in mode 0, vacuum elsewhere -> splitter -> per-mode photon cap
/// (2: qutrit teleporter, 1: qubit teleporter) -> inverse splitter -> vacuum
/// on modes 1..N-1. Requires N <= 4 and input cutoff <= 8 (std::length_error).
/// `splitter` defaults to splitter_matrix(N).
IdealOracleResult simulate_ideal_exact(const FockVector &input, int modes, int per_arm_cutoff,
                                       const std::optional<CMatrix> &splitter = std::nullopt);

/// Coherent input through N arms, each truncated to a qutrit and sent through
/// the Kraus channel, then recombined. Returns the unnormalized
/// (2N+1)x(2N+1) output-port density matrix. Requires N <= 3.
CMatrix simulate_noisy_exact(Complex alpha, int modes, const KrausSet &kraus,
                             const std::optional<CMatrix> &splitter = std::nullopt);

}  // namespace cvtele::oracle

#endif  // CVTELE_ORACLE_H

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

#include "cvtele/oracle.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cvtele::oracle {
namespace {

constexpr int kMaxIdealModes = 4;
constexpr int kMaxNoisyModes = 3;
constexpr std::size_t kMaxInputCutoff = 8;
constexpr int kGuardLevels = 2;

double sqrt_factorial(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= std::sqrt(static_cast<double>(k));
    return r;
}

using Expansion = std::map<Occupation, Complex>;

// Image of the basis ket Π_i (a_i†)^{n_i}/sqrt(n_i!) |0> under a_i† -> Σ_j U_ji b_j†,
// expressed in normalized output kets.
Expansion expand_ket(const Occupation &occ, const CMatrix &u) {
    const int modes = static_cast<int>(occ.size());
    // Polynomial in the b_j† keyed by exponent tuples.
    Expansion poly{{Occupation(modes, 0), Complex{1.0}}};
    for (int i = 0; i < modes; ++i) {
        for (int rep = 0; rep < occ[i]; ++rep) {
            Expansion next;
            for (const auto &[exps, coeff] : poly) {
                for (int j = 0; j < modes; ++j) {
                    const Complex uji = u(j, i);
                    if (uji == 0.0) continue;
                    Occupation e = exps;
                    ++e[j];
                    next[e] += coeff * uji;
                }
            }
            poly = std::move(next);
        }
        if (occ[i] > 1) {
            const double inv = 1.0 / sqrt_factorial(occ[i]);
            for (auto &[exps, coeff] : poly) coeff *= inv;
        }
    }
    // Π (b_j†)^{e_j} |0> = sqrt(Π e_j!) |e>.
    for (auto &[exps, coeff] : poly) {
        double f = 1.0;
        for (int e : exps) f *= sqrt_factorial(e);
        coeff *= f;
    }
    return poly;
}

void check_unitary_shape(const CMatrix &u, int modes) {
    if (u.rows() != static_cast<std::size_t>(modes) || u.cols() != static_cast<std::size_t>(modes)) {
        throw std::invalid_argument("apply_splitter: unitary size does not match mode count");
    }
}

bool others_empty(const Occupation &occ) {
    return std::all_of(occ.begin() + 1, occ.end(), [](int n) { return n == 0; });
}

MultimodeState embed_first_mode(const FockVector &input, int modes, int keep_photons, int cap) {
    MultimodeState state(modes, cap);
    Occupation occ(modes, 0);
    for (int m = 0; m <= keep_photons && m < static_cast<int>(input.size()); ++m) {
        if (input[m] == 0.0) continue;
        occ[0] = m;
        state.add(occ, input[m]);
    }
    return state;
}

}  // namespace

int total_photons(const Occupation &occ) { return std::accumulate(occ.begin(), occ.end(), 0); }

MultimodeState::MultimodeState(int modes, int photon_cap) : modes_(modes), photon_cap_(photon_cap) {
    if (modes < 1) throw std::invalid_argument("MultimodeState: need at least one mode");
}

void MultimodeState::add(const Occupation &occ, Complex amplitude) {
    if (static_cast<int>(occ.size()) != modes_) throw std::invalid_argument("MultimodeState: mode count mismatch");
    if (total_photons(occ) > photon_cap_) {
        throw std::length_error("MultimodeState: photon cap " + std::to_string(photon_cap_) + " exceeded");
    }
    amplitudes_[occ] += amplitude;
}

Complex MultimodeState::amplitude(const Occupation &occ) const {
    const auto it = amplitudes_.find(occ);
    return it == amplitudes_.end() ? Complex{0.0} : it->second;
}

double MultimodeState::norm_squared() const {
    double s = 0.0;
    for (const auto &[occ, a] : amplitudes_) s += std::norm(a);
    return s;
}

void MultimodeState::prune(double threshold) {
    std::erase_if(amplitudes_, [threshold](const auto &kv) { return std::abs(kv.second) < threshold; });
}

MultimodeDensity::MultimodeDensity(int modes, int photon_cap) : modes_(modes), photon_cap_(photon_cap) {
    if (modes < 1) throw std::invalid_argument("MultimodeDensity: need at least one mode");
}

MultimodeDensity MultimodeDensity::from_pure(const MultimodeState &state) {
    MultimodeDensity rho(state.modes(), state.photon_cap());
    for (const auto &[ket, a] : state.amplitudes()) {
        for (const auto &[bra, b] : state.amplitudes()) rho.add(ket, bra, a * std::conj(b));
    }
    return rho;
}

void MultimodeDensity::add(const Occupation &ket, const Occupation &bra, Complex value) {
    if (static_cast<int>(ket.size()) != modes_ || static_cast<int>(bra.size()) != modes_) {
        throw std::invalid_argument("MultimodeDensity: mode count mismatch");
    }
    if (total_photons(ket) > photon_cap_ || total_photons(bra) > photon_cap_) {
        throw std::length_error("MultimodeDensity: photon cap " + std::to_string(photon_cap_) + " exceeded");
    }
    entries_[{ket, bra}] += value;
}

Complex MultimodeDensity::trace() const {
    Complex t = 0.0;
    for (const auto &[key, v] : entries_) {
        if (key.first == key.second) t += v;
    }
    return t;
}

double MultimodeDensity::hermiticity_defect() const {
    double worst = 0.0;
    for (const auto &[key, v] : entries_) {
        const auto it = entries_.find({key.second, key.first});
        const Complex mirror = it == entries_.end() ? Complex{0.0} : it->second;
        worst = std::max(worst, std::abs(v - std::conj(mirror)));
    }
    return worst;
}

void MultimodeDensity::prune(double threshold) {
    std::erase_if(entries_, [threshold](const auto &kv) { return std::abs(kv.second) < threshold; });
}

CMatrix splitter_matrix(int modes) {
    if (modes < 1) throw std::invalid_argument("splitter_matrix: need at least one mode");
    CMatrix u(modes, modes);
    const double scale = 1.0 / std::sqrt(static_cast<double>(modes));
    for (int j = 0; j < modes; ++j) {
        for (int k = 0; k < modes; ++k) {
            // Reduce jk mod N first so the phases are exact for the uniform row/column.
            const double phase = 2.0 * std::numbers::pi * static_cast<double>((j * k) % modes) / modes;
            u(j, k) = std::polar(scale, phase);
        }
    }
    return u;
}

CMatrix householder_completion(const std::vector<Complex> &first_column) {
    const std::size_t n = first_column.size();
    if (n == 0) throw std::invalid_argument("householder_completion: empty column");
    double norm2 = 0.0;
    for (const auto &c : first_column) norm2 += std::norm(c);
    if (std::abs(norm2 - 1.0) > 1e-12) throw std::invalid_argument("householder_completion: column is not a unit vector");

    // Rotate the global phase so the leading entry is real and non-negative,
    // reflect e_1 onto it, then restore the phase.
    const Complex phase = std::abs(first_column[0]) > 0.0 ? first_column[0] / std::abs(first_column[0]) : Complex{1.0};
    std::vector<Complex> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = -first_column[i] / phase;
    w[0] += 1.0;
    double wnorm2 = 0.0;
    for (const auto &c : w) wnorm2 += std::norm(c);

    CMatrix h = CMatrix::identity(n);
    if (wnorm2 > 1e-30) h -= CMatrix::outer(w, w) * Complex{2.0 / wnorm2};
    return h * phase;
}

MultimodeState apply_splitter(const MultimodeState &state, const CMatrix &unitary) {
    check_unitary_shape(unitary, state.modes());
    MultimodeState out(state.modes(), state.photon_cap());
    for (const auto &[occ, a] : state.amplitudes()) {
        for (const auto &[image, c] : expand_ket(occ, unitary)) out.add(image, a * c);
    }
    out.prune();
    return out;
}

MultimodeDensity apply_splitter(const MultimodeDensity &rho, const CMatrix &unitary) {
    check_unitary_shape(unitary, rho.modes());
    std::map<Occupation, Expansion> cache;
    auto image_of = [&](const Occupation &occ) -> const Expansion & {
        auto it = cache.find(occ);
        if (it == cache.end()) it = cache.emplace(occ, expand_ket(occ, unitary)).first;
        return it->second;
    };
    MultimodeDensity out(rho.modes(), rho.photon_cap());
    for (const auto &[key, v] : rho.entries()) {
        const Expansion &kets = image_of(key.first);
        const Expansion &bras = image_of(key.second);
        for (const auto &[k, ck] : kets) {
            for (const auto &[b, cb] : bras) out.add(k, b, v * ck * std::conj(cb));
        }
    }
    out.prune();
    return out;
}

MultimodeState truncate_per_mode(const MultimodeState &state, int per_mode_cap) {
    MultimodeState out(state.modes(), state.photon_cap());
    for (const auto &[occ, a] : state.amplitudes()) {
        if (std::all_of(occ.begin(), occ.end(), [per_mode_cap](int n) { return n <= per_mode_cap; })) out.add(occ, a);
    }
    return out;
}

MultimodeDensity apply_local_channel(const MultimodeDensity &rho, int mode, const KrausSet &kraus) {
    if (mode < 0 || mode >= rho.modes()) throw std::out_of_range("apply_local_channel: mode index out of range");
    MultimodeDensity out(rho.modes(), rho.photon_cap());
    for (const auto &[key, v] : rho.entries()) {
        const int n = key.first[mode];
        const int m = key.second[mode];
        if (n > 2 || m > 2) throw std::invalid_argument("apply_local_channel: mode holds more than two photons");
        Occupation ket = key.first;
        Occupation bra = key.second;
        for (const CMatrix &k : kraus.operators()) {
            for (int np = 0; np < 3; ++np) {
                const Complex left = k(np, n);
                if (left == 0.0) continue;
                ket[mode] = np;
                for (int mp = 0; mp < 3; ++mp) {
                    const Complex right = std::conj(k(mp, m));
                    if (right == 0.0) continue;
                    bra[mode] = mp;
                    out.add(ket, bra, left * v * right);
                }
            }
        }
    }
    out.prune();
    return out;
}

FockVector project_onto_first_mode(const MultimodeState &state, int max_photons) {
    std::vector<Complex> amps(max_photons + 1);
    for (const auto &[occ, a] : state.amplitudes()) {
        if (others_empty(occ) && occ[0] <= max_photons) amps[occ[0]] += a;
    }
    return FockVector(std::move(amps));
}

CMatrix project_onto_first_mode(const MultimodeDensity &rho, int max_photons) {
    CMatrix out(max_photons + 1, max_photons + 1);
    for (const auto &[key, v] : rho.entries()) {
        if (others_empty(key.first) && others_empty(key.second) && key.first[0] <= max_photons &&
            key.second[0] <= max_photons) {
            out(key.first[0], key.second[0]) += v;
        }
    }
    return out;
}

IdealOracleResult simulate_ideal_exact(const FockVector &input, int modes, int per_arm_cutoff,
                                       const std::optional<CMatrix> &splitter) {
    if (modes < 1 || modes > kMaxIdealModes) throw std::length_error("simulate_ideal_exact: needs 1 <= N <= 4");
    if (input.cutoff() > kMaxInputCutoff) throw std::length_error("simulate_ideal_exact: input cutoff exceeds 8");
    if (per_arm_cutoff != 1 && per_arm_cutoff != 2) {
        throw std::invalid_argument("simulate_ideal_exact: per-arm cutoff must be 1 (qubit) or 2 (qutrit)");
    }
    const CMatrix u = splitter.value_or(splitter_matrix(modes));
    const int window = modes * per_arm_cutoff;
    // Photon number is conserved by the splitter, so nothing above the window survives.
    const int keep = std::min(window, static_cast<int>(input.cutoff()));
    MultimodeState state = embed_first_mode(input, modes, keep, keep + kGuardLevels);

    state = apply_splitter(state, u);
    state = truncate_per_mode(state, per_arm_cutoff);
    state = apply_splitter(state, u.adjoint());

    IdealOracleResult r;
    r.amplitudes = project_onto_first_mode(state, window);
    r.success_probability = r.amplitudes.norm_squared();
    return r;
}

CMatrix simulate_noisy_exact(Complex alpha, int modes, const KrausSet &kraus, const std::optional<CMatrix> &splitter) {
    if (modes < 1 || modes > kMaxNoisyModes) throw std::length_error("simulate_noisy_exact: needs 1 <= N <= 3");
    const CMatrix u = splitter.value_or(splitter_matrix(modes));
    const int window = 2 * modes;
    MultimodeState state = embed_first_mode(coherent(alpha, window), modes, window, window + kGuardLevels);

    state = apply_splitter(state, u);
    state = truncate_per_mode(state, 2);

    MultimodeDensity rho = MultimodeDensity::from_pure(state);
    for (int mode = 0; mode < modes; ++mode) rho = apply_local_channel(rho, mode, kraus);
    rho = apply_splitter(rho, u.adjoint());
    return project_onto_first_mode(rho, window);
}

}  // namespace cvtele::oracle

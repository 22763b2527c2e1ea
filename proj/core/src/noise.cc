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

#include "cvtele/noise.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cvtele {

std::string_view to_string(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::kBitFlip:
            return "bit_flip";
        case NoiseKind::kPhaseFlip:
            return "phase_flip";
        case NoiseKind::kDepolarizing:
            return "depolarizing";
    }
    throw std::invalid_argument("unknown NoiseKind");
}

NoiseKind parse_noise_kind(std::string_view name) {
    for (NoiseKind k : kAllNoiseKinds) {
        if (to_string(k) == name) return k;
    }
    throw std::invalid_argument("unknown noise kind '" + std::string(name) +
                                "' (expected bit_flip, phase_flip or depolarizing)");
}

std::vector<CMatrix> KrausSet::operators() const {
    if (weights.size() != unitaries.size()) throw std::logic_error("KrausSet: weights and unitaries differ in length");
    std::vector<CMatrix> out;
    for (std::size_t i = 0; i < weights.size(); ++i) out.push_back(std::sqrt(weights[i]) * unitaries[i]);
    return out;
}

CMatrix KrausSet::completeness() const {
    CMatrix sum(3, 3);
    for (const auto &k : operators()) sum += k.adjoint() * k;
    return sum;
}

KrausSet kraus_set(NoiseKind kind, double p_noise) {
    if (!(p_noise >= 0.0 && p_noise <= 1.0)) throw std::domain_error("kraus_set: p_noise must lie in [0, 1]");

    KrausSet set{kind, p_noise, {}, {}};
    auto add = [&](double w, const CMatrix &u) {
        set.weights.push_back(w);
        set.unitaries.push_back(u);
    };
    add(1.0 - p_noise, CMatrix::identity(3));

    switch (kind) {
        case NoiseKind::kBitFlip: {
            add(p_noise / 2.0, CMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
            add(p_noise / 2.0, CMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
            break;
        }
        case NoiseKind::kPhaseFlip: {
            add(p_noise / 2.0, CMatrix::diagonal({1.0, -1.0, 1.0}));
            add(p_noise / 2.0, CMatrix::diagonal({1.0, 1.0, -1.0}));
            break;
        }
        case NoiseKind::kDepolarizing: {
            const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
            const CMatrix d1{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
            const CMatrix d2 = CMatrix::diagonal({1.0, omega, omega * omega});
            const CMatrix d1sq = d1 * d1;
            const CMatrix d2sq = d2 * d2;
            for (const CMatrix &op : {d1, d2, d1sq, d1 * d2, d1sq * d2, d1 * d2sq, d1sq * d2sq, d2sq}) {
                add(p_noise / 8.0, op);
            }
            break;
        }
    }
    return set;
}

CMatrix apply_channel(const CMatrix &rho, const KrausSet &kraus) {
    if (kraus.weights.size() != kraus.unitaries.size()) {
        throw std::invalid_argument("apply_channel: weights and unitaries differ in length");
    }
    // Identity term last: p/2 + p/2 is exact and fl(1 - p) + p rounds to 1.
    CMatrix out(rho.rows(), rho.cols());
    for (std::size_t i = kraus.weights.size(); i-- > 0;) {
        const CMatrix &u = kraus.unitaries[i];
        out += kraus.weights[i] * (u * rho * u.adjoint());
    }
    return out;
}

CMatrix maximally_entangled_qutrits() {
    std::vector<Complex> phi(9);
    const double amp = 1.0 / std::sqrt(3.0);
    phi[0] = phi[4] = phi[8] = amp;
    return CMatrix::outer(phi, phi);
}

CMatrix effective_resource(const KrausSet &kraus) {
    const CMatrix phi = maximally_entangled_qutrits();
    const CMatrix id = CMatrix::identity(3);
    CMatrix rho(9, 9);
    for (const auto &k : kraus.operators()) {
        const CMatrix local = kron(id, k);
        rho += local * phi * local.adjoint();
    }
    return rho;
}

CMatrix effective_resource(NoiseKind kind, double p_noise) { return effective_resource(kraus_set(kind, p_noise)); }

double log_negativity(const CMatrix &two_qutrit_state) {
    return std::log2(trace_norm(partial_transpose_first(two_qutrit_state, 3, 3)));
}

double log_negativity(NoiseKind kind, double p_noise) { return log_negativity(effective_resource(kind, p_noise)); }

}  // namespace cvtele

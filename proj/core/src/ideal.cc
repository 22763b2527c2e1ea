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

#include "cvtele/ideal.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace cvtele {
namespace {

void check_arms(int arms) {
    if (arms < 1 || arms > kMaxArms) {
        throw std::out_of_range("transfer profile: arm count must be in [1, 64], got " + std::to_string(arms));
    }
}

// (m!/N^m) N! Σ_k w^k / (k! (m-2k)! (N-m+k)!) with w = 1/2 (multinomial) or
// w = 1 (unweighted). Every factorial is folded into running ratios of
// magnitude O(1):
//   first term = [Π_{i<m-k0} (N-i)/N] * [Π_{j=1..k0} (m-2j+2)(m-2j+1) w / (j N)]
//   term_{k+1} / term_k = w (m-2k)(m-2k-1) / ((k+1)(N-m+k+1)).
double qutrit_weight(int n_arms, int m, double w) {
    const double n = n_arms;
    const int k_lo = std::max(0, m - n_arms);
    const int k_hi = m / 2;
    double term = 1.0;
    for (int i = 0; i < m - k_lo; ++i) term *= (n - i) / n;
    for (int j = 1; j <= k_lo; ++j) term *= static_cast<double>(m - 2 * j + 2) * (m - 2 * j + 1) * w / (j * n);
    double sum = 0.0;
    for (int k = k_lo; k <= k_hi; ++k) {
        sum += term;
        term *= w * static_cast<double>(m - 2 * k) * (m - 2 * k - 1) / ((k + 1.0) * (n - m + k + 1.0));
    }
    return sum;
}

TransferProfile qutrit_profile(int arms, double w) {
    check_arms(arms);
    TransferProfile p{arms, 3, std::vector<double>(2 * arms + 1)};
    p.weights[0] = 1.0;
    for (int m = 1; m <= 2 * arms; ++m) p.weights[m] = qutrit_weight(arms, m, w);
    return p;
}

}  // namespace

TransferProfile transfer_profile_qutrit(int arms) { return qutrit_profile(arms, 0.5); }

TransferProfile transfer_profile_qutrit_unweighted(int arms) { return qutrit_profile(arms, 1.0); }

TransferProfile transfer_profile_qubit(int arms) {
    check_arms(arms);
    TransferProfile p{arms, 2, std::vector<double>(arms + 1)};
    double a = 1.0;
    for (int m = 0; m <= arms; ++m) {
        p.weights[m] = a;
        a *= static_cast<double>(arms - m) / arms;
    }
    return p;
}

PureTeleportResult teleport_pure(const FockVector &input, const TransferProfile &profile) {
    const std::size_t top = profile.max_photons();
    std::vector<Complex> out(top + 1);
    double ps = 0.0;
    Complex overlap = 0.0;
    for (std::size_t m = 0; m <= top; ++m) {
        out[m] = input[m] * profile[m];
        ps += std::norm(out[m]);
        overlap += std::conj(input[m]) * out[m];
    }
    if (!(ps > 0.0)) throw NoSuccessfulBranch("teleport_pure: input has no support inside the teleporter window");

    PureTeleportResult r;
    r.amplitudes = FockVector(out);
    const double scale = 1.0 / std::sqrt(ps);
    for (auto &c : out) c *= scale;
    r.output = FockVector(std::move(out));
    r.success_probability = ps;
    r.fidelity = std::norm(overlap) / ps;
    return r;
}

Metrics teleport_tmsv(double lambda, const TransferProfile &profile) {
    const SchmidtDiagonalState s = tmsv(lambda, profile.max_photons());
    double ps = 0.0;
    double overlap = 0.0;
    for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
        const double c2 = s.coeffs[n] * s.coeffs[n];
        ps += c2 * profile[n] * profile[n];
        overlap += c2 * profile[n];
    }
    if (!(ps > 0.0)) throw NoSuccessfulBranch("teleport_tmsv: no surviving amplitude");
    return {ps, overlap * overlap / ps};
}

}  // namespace cvtele

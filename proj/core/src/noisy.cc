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

#include "cvtele/noisy.h"

#include <cmath>
#include <string>

#include "cvtele/fock.h"

namespace cvtele {
namespace {

constexpr double kMinSuccessProbability = 1e-300;

void check_arms(int arms) {
    if (arms < 1 || arms > kMaxArms) throw std::out_of_range("arm count must be in [1, 64], got " + std::to_string(arms));
}

}  // namespace

CMatrix OutputDensity::normalized() const {
    if (!(success_probability >= kMinSuccessProbability)) throw NoSuccessfulBranch("output density has zero trace");
    return density * Complex{1.0 / success_probability};
}

ArmState arm_input(Complex alpha, int arms) {
    check_arms(arms);
    const Complex a = alpha / std::sqrt(static_cast<double>(arms));
    const FockVector t = coherent(a, 2);
    return {CMatrix::outer(t.coeffs(), t.coeffs()), a, arms};
}

ArmState arm_output(const ArmState &arm, const KrausSet &kraus) {
    return {apply_channel(arm.rho, kraus), arm.alpha_per_arm, arm.arms};
}

OutputDensity recombine(const ArmState &arm, int arms) {
    check_arms(arms);
    if (arm.rho.rows() != 3 || arm.rho.cols() != 3) throw std::invalid_argument("recombine: arm state must be 3x3");

    const double inv_sqrt_factorial[3] = {1.0, 1.0, 1.0 / std::sqrt(2.0)};
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(arms));
    const double arm_scale[3] = {1.0, inv_sqrt_n, inv_sqrt_n * inv_sqrt_n};
    CMatrix b(3, 3);
    for (int n = 0; n < 3; ++n) {
        for (int m = 0; m < 3; ++m) {
            b(n, m) = arm.rho(n, m) * (inv_sqrt_factorial[n] * inv_sqrt_factorial[m] * arm_scale[n] * arm_scale[m]);
        }
    }

    // power holds the j-fold convolution, support (2j+1)^2.
    CMatrix power{{1.0}};
    for (int j = 1; j <= arms; ++j) {
        const std::size_t prev = power.rows();
        CMatrix next(prev + 2, prev + 2);
        for (std::size_t p = 0; p < prev; ++p) {
            for (std::size_t q = 0; q < prev; ++q) {
                const Complex v = power(p, q);
                if (v == 0.0) continue;
                for (int n = 0; n < 3; ++n) {
                    for (int m = 0; m < 3; ++m) next(p + n, q + m) += v * b(n, m);
                }
            }
        }
        power = std::move(next);
    }

    // sqrt(p!) running.
    std::vector<double> sqrt_factorial(power.rows());
    sqrt_factorial[0] = 1.0;
    for (std::size_t p = 1; p < sqrt_factorial.size(); ++p) {
        sqrt_factorial[p] = sqrt_factorial[p - 1] * std::sqrt(static_cast<double>(p));
    }
    OutputDensity out{CMatrix(power.rows(), power.cols()), 0.0, arms};
    for (std::size_t p = 0; p < power.rows(); ++p) {
        for (std::size_t q = 0; q < power.cols(); ++q) out.density(p, q) = power(p, q) * (sqrt_factorial[p] * sqrt_factorial[q]);
    }
    out.success_probability = out.density.trace().real();
    return out;
}

Metrics noisy_metrics(Complex alpha, int arms, const KrausSet &kraus) {
    const OutputDensity out = recombine(arm_output(arm_input(alpha, arms), kraus), arms);
    if (!(out.success_probability >= kMinSuccessProbability)) {
        throw NoSuccessfulBranch("noisy_metrics: output density has zero trace");
    }
    const FockVector target = coherent(alpha, 2 * static_cast<std::size_t>(arms));
    return {out.success_probability, expectation(out.density, target) / out.success_probability};
}

Metrics noisy_metrics(Complex alpha, int arms, NoiseKind kind, double p_noise) {
    return noisy_metrics(alpha, arms, kraus_set(kind, p_noise));
}

}  // namespace cvtele
